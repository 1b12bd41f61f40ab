#pragma once

#include <string>
#include <vector>

#include "cmpoly/exactalg/poly_lambda.hpp"
#include "cmpoly/jets/jet_sequence.hpp"

namespace cmpoly::jets {

/// sum_i a_i R^{k-i} for P = sum_i a_i lambda^{k-i}.
PolyMatrix eval_map(const JetSequence& seq, const PolyLambda& p);

struct AdmissibilityReport {
  PolyLambda polynomial;
  PolyMatrix residual;
  bool is_admissible = false;
};

/// Throws UsageError when P is not monic or a coefficient has the wrong degree.
AdmissibilityReport check_admissible(const JetSequence& seq, const PolyLambda& p);

struct Violation {
  enum class Kind { inhomogeneous, not_self_adjoint, direction_not_annihilated };
  int order;
  Kind kind;
  std::string detail;
};

struct ValidationReport {
  int max_order = 0;
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks homogeneity, G-self-adjointness of every R^k with k <= max_k, and
/// R^0(X)X = 0.
ValidationReport validate(const JetSequence& seq, int max_k);

std::string to_string(Violation::Kind kind);

}  // namespace cmpoly::jets
