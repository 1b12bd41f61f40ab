#pragma once

#include <optional>
#include <vector>

#include "cmpoly/exactalg/unipoly.hpp"
#include "cmpoly/jets/jet_sequence.hpp"
#include "cmpoly/minpoly/solver.hpp"

namespace cmpoly::minpoly {

struct RootReport {
  bool alternate_vanish = false;  ///< P / lambda^eps has only even powers
  bool zero_root = false;
  bool pure_imaginary_simple = false;
};

/// Exact test that every nonzero root of P is purely imaginary and simple,
/// and 0 is at most a simple root. Writes P = lambda^eps Q(lambda^2) and
/// asks for q(mu) to have only real, simple, negative roots.
/// Throws UsageError when positive_definite is false.
RootReport root_structure(const UniPoly& p, bool positive_definite = true);
/// Same, after specializing the coefficients of P at x.
RootReport root_structure(const jets::JetSequence& seq, const PolyLambda& p, const QVector& x);

struct RicciReport {
  std::vector<bool> trace_zero;  ///< entry i-1: trace R^i == 0, 1 <= i <= k
  bool ricci_nonzero = false;
  bool last_coefficient_zero = false;
  bool degree_odd = false;
  /// Ric != 0 implies a_k = 0, and for positive definite metrics k odd.
  bool consistent = false;
};

RicciReport ricci_diagnostics(const jets::JetSequence& seq, const MinimalPolynomial& p);

struct DivisibilityReport {
  bool divisible = false;
  PolyLambda quotient;
  PolyLambda remainder;
};

/// Divides Q by the minimal polynomial. Throws UsageError with the first
/// residual entry when eval_map(seq, Q) is not zero.
DivisibilityReport divides(const jets::JetSequence& seq, const PolyLambda& q, const MinimalPolynomial& p);

/// True when p divides q in Q[lambda].
bool unipoly_divides(const UniPoly& p, const UniPoly& q);

}  // namespace cmpoly::minpoly
