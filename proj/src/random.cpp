#include "homakivis/random.hpp"

namespace homakivis {

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(below(span));
}

Scalar Rng::rational(std::int64_t bound) {
  const std::int64_t num = between(-bound, bound);
  const std::int64_t den = between(1, 3);
  Scalar s(static_cast<long>(num), static_cast<unsigned long>(den));
  s.canonicalize();
  return s;
}

Vector Rng::vector(std::size_t dim, std::int64_t bound) {
  Vector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = rational(bound);
  return v;
}

}  // namespace homakivis
