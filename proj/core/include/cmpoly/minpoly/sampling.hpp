#pragma once

#include <cstdint>
#include <random>

#include "cmpoly/exactalg/qmatrix.hpp"

namespace cmpoly::minpoly {

/// Seeded source of integer sample points in {-bound..bound}^n, never the
/// zero vector. Reduction is by plain modulo so sequences are identical on
/// every standard library.
class PointSampler {
 public:
  explicit PointSampler(std::uint64_t seed, int bound = 9) : engine_(seed), bound_(bound) {}
  QVector next(std::size_t n);
  int bound() const { return bound_; }

 private:
  std::mt19937_64 engine_;
  int bound_;
};

}  // namespace cmpoly::minpoly
