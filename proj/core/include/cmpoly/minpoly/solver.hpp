#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cmpoly/error.hpp"
#include "cmpoly/exactalg/poly_lambda.hpp"
#include "cmpoly/jets/jet_sequence.hpp"

namespace cmpoly::minpoly {

struct MinimalPolynomial {
  PolyLambda p;
  QVector witness;  ///< R^0..R^{k-1} independent here
  bool verified = false;
  std::uint64_t seed = 0;
  std::size_t samples = 0;

  int degree() const { return p.degree(); }
  /// a_i, the coefficient of lambda^{k-i}; a_0 = 1.
  const MultiPoly& a(std::size_t i) const { return p.coefficient(i); }
};

struct DegreeResult {
  bool bound_exceeded = false;
  int k = 0;
  QVector witness;
  int max_k = 0;
  std::size_t samples = 0;
};

/// Largest pointwise degree k(X) over `samples` seeded points, with a point
/// attaining it. max_k defaults to n(n+1)/2.
DegreeResult generic_degree(const jets::JetSequence& seq, std::optional<int> max_k, std::uint64_t seed,
                            std::size_t samples);

/// Raised by solve_coefficients when the pointwise coefficients of some a_i
/// do not lie on a homogeneous polynomial of degree i.
class NotPolynomialError : public ComputationError {
 public:
  NotPolynomialError(std::size_t index, Rational residual, QVector point)
      : ComputationError("coefficients not polynomial: a" + std::to_string(index) + " misfit " +
                         cmpoly::to_string(residual)),
        index_(index),
        residual_(std::move(residual)),
        point_(std::move(point)) {}
  std::size_t index() const { return index_; }
  const Rational& residual() const { return residual_; }
  const QVector& point() const { return point_; }

 private:
  std::size_t index_;
  Rational residual_;
  QVector point_;
};

/// a_1..a_k reconstructed from pointwise relations at seeded points with
/// k(X) = k, by homogeneous interpolation. Points with smaller k(X) are
/// skipped. Throws NotPolynomialError on inconsistent samples and
/// ComputationError if a point has k(X) > k.
std::vector<MultiPoly> solve_coefficients(const jets::JetSequence& seq, int k, std::uint64_t seed);

struct Verification {
  enum class Status { verified, residual_nonzero, witness_dependent };
  Status status = Status::verified;
  MinimalPolynomial result;
  std::string detail;  ///< first nonzero residual entry or witness message
  bool ok() const { return status == Status::verified; }
};

/// Exact certificate: eval_map(seq, P) is the zero matrix and the jets below
/// degree k are independent at the witness.
Verification verify_exact(const jets::JetSequence& seq, const PolyLambda& p, const QVector& witness);

/// Cheaper check: the specialized relation vanishes at `samples` seeded
/// points and the witness is independent. Never sets result.verified.
Verification verify_sampled(const jets::JetSequence& seq, const PolyLambda& p, const QVector& witness,
                            std::uint64_t seed, std::size_t samples);

std::string to_string(Verification::Status status);

struct SolveOptions {
  std::uint64_t seed = 42;
  std::size_t samples = 64;
  std::optional<int> max_k;
};

struct SolveOutcome {
  enum class Status { verified, rational_only, bound_exceeded, verification_failed };
  Status status = Status::verified;
  DegreeResult degree;
  std::optional<MinimalPolynomial> min_poly;
  std::string detail;
};

/// generic_degree, solve_coefficients and verify_exact in sequence.
SolveOutcome compute_min_poly(const jets::JetSequence& seq, const SolveOptions& options = {});

std::string to_string(SolveOutcome::Status status);

}  // namespace cmpoly::minpoly
