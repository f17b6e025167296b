#include "homakivis/genesis.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "homakivis/check.hpp"
#include "homakivis/errors.hpp"

namespace homakivis {

namespace {

struct Block {
  std::size_t length;
  bool negative;  // product of the signs along the cycle is -1

  unsigned order() const { return static_cast<unsigned>(negative ? 2 * length : length); }
};

bool block_less_equal(const Block& a, const Block& b) {
  return a.length < b.length || (a.length == b.length && a.negative <= b.negative);
}

// All multisets of blocks (listed in nondecreasing order) filling `left`
// positions whose orders have lcm exactly m.
void cycle_types(std::size_t left, unsigned m, unsigned lcm, std::vector<Block>& current,
                 std::vector<std::vector<Block>>& out) {
  if (left == 0) {
    if (lcm == m) out.push_back(current);
    return;
  }
  for (std::size_t length = 1; length <= left; ++length) {
    for (bool negative : {false, true}) {
      const Block b{length, negative};
      if (m % b.order() != 0) continue;
      if (!current.empty() && !block_less_equal(current.back(), b)) continue;
      current.push_back(b);
      cycle_types(left - length, m, std::lcm(lcm, b.order()), current, out);
      current.pop_back();
    }
  }
}

std::vector<std::vector<Block>> all_cycle_types(std::size_t dim, unsigned m) {
  std::vector<std::vector<Block>> out;
  std::vector<Block> current;
  cycle_types(dim, m, 1, current, out);
  return out;
}

}  // namespace

void validate(const GenConfig& cfg) {
  if (cfg.dim < 2 || cfg.dim > 6) throw InputError("dim", "must be in [2, 6], got " + std::to_string(cfg.dim));
  if (cfg.coeff_bound < 0) throw InputError("bound", "must be nonnegative");
  if (cfg.twist_order == 0) throw InputError("order", "must be at least 1");
}

BilinearMap random_bilinear(const GenConfig& cfg) {
  Rng rng(cfg.seed);
  return random_bilinear(cfg, rng);
}

BilinearMap random_bilinear(const GenConfig& cfg, Rng& rng) {
  validate(cfg);
  BilinearMap b(cfg.dim);
  for (std::size_t i = 0; i < cfg.dim; ++i) {
    for (std::size_t j = 0; j < cfg.dim; ++j) {
      for (std::size_t k = 0; k < cfg.dim; ++k) b.set(i, j, k, rng.rational(cfg.coeff_bound));
    }
  }
  return b;
}

bool order_feasible(std::size_t dim, unsigned m) { return m > 0 && !all_cycle_types(dim, m).empty(); }

LinearMap random_finite_order_map(const GenConfig& cfg) {
  Rng rng(cfg.seed);
  return random_finite_order_map(cfg, rng);
}

LinearMap random_finite_order_map(const GenConfig& cfg, Rng& rng) {
  validate(cfg);
  const auto types = all_cycle_types(cfg.dim, cfg.twist_order);
  if (types.empty()) {
    throw InfeasibleOrder("no signed permutation of size " + std::to_string(cfg.dim) + " has order " +
                          std::to_string(cfg.twist_order));
  }
  const auto& blocks = types[rng.below(types.size())];

  std::vector<std::size_t> positions(cfg.dim);
  std::iota(positions.begin(), positions.end(), 0);
  for (std::size_t i = cfg.dim; i > 1; --i) std::swap(positions[i - 1], positions[rng.below(i)]);

  Matrix m(cfg.dim, cfg.dim);
  std::size_t start = 0;
  for (const Block& b : blocks) {
    int product = 1;
    for (std::size_t t = 0; t < b.length; ++t) {
      int sign;
      if (t + 1 < b.length) {
        sign = rng.below(2) == 0 ? 1 : -1;
        product *= sign;
      } else {
        sign = (b.negative ? -1 : 1) * product;
      }
      const std::size_t from = positions[start + t];
      const std::size_t to = positions[start + (t + 1) % b.length];
      m(to, from) = sign;
    }
    start += b.length;
  }
  return LinearMap(std::move(m));
}

BilinearMap equivariant_average(const BilinearMap& mu, const LinearMap& p, unsigned m) {
  if (mu.dim() != p.dim()) throw DimensionMismatch("equivariant_average: map and multiplication dimensions differ");
  const std::size_t n = mu.dim();
  const Identity periodic{Property::finite_order, 1, [&](std::span<const Vector> a) {
                            return std::pair{apply(power(p, m), a[0]), a[0]};
                          }};
  CheckReport order = sweep_basis(periodic, n);
  if (m == 0 || !order.holds) {
    if (m == 0) order.holds = false;
    throw PreconditionFailed("map does not satisfy P^m = id for m = " + std::to_string(m), std::move(order));
  }

  std::vector<LinearMap> forward;
  std::vector<LinearMap> backward;
  for (unsigned k = 0; k < m; ++k) {
    forward.push_back(power(p, k));
    backward.push_back(power(p, (m - k) % m));
  }
  const Scalar scale(1, m);
  return BilinearMap::from_basis(n, [&](std::size_t i, std::size_t j) {
    Vector sum(n);
    for (unsigned k = 0; k < m; ++k) {
      sum += apply(backward[k], eval_bilinear(mu, forward[k].image(i), forward[k].image(j)));
    }
    return scale * sum;
  });
}

HomAlgebra random_multiplicative_hom_algebra(const GenConfig& cfg) {
  Rng rng(cfg.seed);
  const BilinearMap mu = random_bilinear(cfg, rng);
  const LinearMap p = random_finite_order_map(cfg, rng);
  return yau_twist(equivariant_average(mu, p, cfg.twist_order), p);
}

GenConfig suite_config(std::size_t index) {
  GenConfig cfg;
  cfg.dim = 2 + index % 4;
  cfg.seed = 1000 + index;
  cfg.coeff_bound = 3;
  cfg.twist_order = static_cast<unsigned>(1 + (index / 4) % 4);
  while (!order_feasible(cfg.dim, cfg.twist_order)) --cfg.twist_order;
  return cfg;
}

}  // namespace homakivis
