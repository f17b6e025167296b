#pragma once

#include <cstddef>
#include <cstdint>

#include "homakivis/hom_algebra.hpp"
#include "homakivis/linear.hpp"
#include "homakivis/random.hpp"

namespace homakivis {

/// Generator settings. Same config, same output, bit for bit.
struct GenConfig {
  std::size_t dim = 3;
  std::uint64_t seed = 1;
  std::int64_t coeff_bound = 3;
  unsigned twist_order = 1;
};

/// Throws InputError for dim outside [2, 6], a negative bound or order 0.
void validate(const GenConfig& cfg);

/// Structure constants drawn in (i, j, k) order; numerators in
/// [-bound, bound], denominators in {1, 2, 3}.
BilinearMap random_bilinear(const GenConfig& cfg);
BilinearMap random_bilinear(const GenConfig& cfg, Rng& rng);

/// Whether some signed permutation matrix of size dim has order exactly m.
bool order_feasible(std::size_t dim, unsigned m);

/// Signed permutation matrix of exact order cfg.twist_order. A cycle of
/// length L whose signs multiply to +1 has order L, to -1 order 2L; the
/// cycle type is drawn uniformly among those whose orders have lcm m.
/// Throws InfeasibleOrder when there is none.
LinearMap random_finite_order_map(const GenConfig& cfg);
LinearMap random_finite_order_map(const GenConfig& cfg, Rng& rng);

/// mu'(x, y) = (1/m) sum_{k<m} P^{-k} mu(P^k x, P^k y); P is an
/// automorphism of the result. Throws PreconditionFailed if P^m != id.
BilinearMap equivariant_average(const BilinearMap& mu, const LinearMap& p, unsigned m);

/// yau_twist(equivariant_average(mu, P, m), P) for a random mu and P
/// drawn from one stream seeded with cfg.seed.
HomAlgebra random_multiplicative_hom_algebra(const GenConfig& cfg);

/// Config number `index` of the seeded property suites: dims cycle
/// through 2..5, orders through 1..4 (skipping orders a dimension
/// cannot realize), bound 3.
GenConfig suite_config(std::size_t index);

}  // namespace homakivis
