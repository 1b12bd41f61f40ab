#include "cmpoly/minpoly/sampling.hpp"

#include <algorithm>

namespace cmpoly::minpoly {

QVector PointSampler::next(std::size_t n) {
  const auto span = static_cast<std::uint64_t>(2 * bound_ + 1);
  QVector x(n);
  do {
    for (auto& v : x) v = static_cast<long>(engine_() % span) - bound_;
  } while (std::all_of(x.begin(), x.end(), [](const Rational& v) { return is_zero(v); }));
  return x;
}

}  // namespace cmpoly::minpoly
