#include "homakivis/check.hpp"

namespace homakivis {

std::string_view property_name(Property p) {
  switch (p) {
    case Property::associative: return "associative";
    case Property::hom_associative: return "hom_associative";
    case Property::multiplicative: return "multiplicative";
    case Property::hom_flexible: return "hom_flexible";
    case Property::hom_alternative: return "hom_alternative";
    case Property::twisted_associator: return "twisted_associator";
    case Property::morphism: return "morphism";
    case Property::finite_order: return "finite_order";
    case Property::hom_akivis: return "hom_akivis";
    case Property::akivis: return "akivis";
    case Property::hom_jacobi: return "hom_jacobi";
    case Property::jacobi: return "jacobi";
    case Property::hom_malcev: return "hom_malcev";
    case Property::malcev: return "malcev";
    case Property::akivis_morphism: return "akivis_morphism";
    case Property::flexible_jacobi_relation: return "flexible_jacobi_relation";
    case Property::alternative_jacobi_relation: return "alternative_jacobi_relation";
    case Property::associator_commutator_relation: return "associator_commutator_relation";
    case Property::malcev_pipeline: return "malcev_pipeline";
    case Property::linearized: return "linearized";
    case Property::quadratic: return "quadratic";
    case Property::polarized: return "polarized";
    case Property::basis_triples: return "basis_triples";
    case Property::random_samples: return "random_samples";
    case Property::left_alternative: return "left_alternative";
    case Property::right_alternative: return "right_alternative";
    case Property::preserves_product: return "preserves_product";
    case Property::preserves_bracket: return "preserves_bracket";
    case Property::preserves_ternary: return "preserves_ternary";
    case Property::commutes_with_twist: return "commutes_with_twist";
    case Property::twice_cyclic_ternary: return "twice_cyclic_ternary";
    case Property::cyclic_ternary_zero: return "cyclic_ternary_zero";
    case Property::hom_lie_iff_cyclic_zero: return "hom_lie_iff_cyclic_zero";
    case Property::six_times_ternary: return "six_times_ternary";
    case Property::six_times_cyclic_ternary: return "six_times_cyclic_ternary";
  }
  return "unknown";
}

const CheckReport* CheckReport::part(Property p) const {
  for (const auto& sub : parts) {
    if (sub.property == p) return &sub;
  }
  return nullptr;
}

std::optional<Witness> evaluate_at(const Identity& id, std::span<const Vector> args) {
  auto [lhs, rhs] = id.sides(args);
  if (lhs == rhs) return std::nullopt;
  return Witness{{}, std::vector<Vector>(args.begin(), args.end()), std::move(lhs), std::move(rhs)};
}

std::optional<Witness> witness_at(const Identity& id, std::size_t dim, std::span<const std::size_t> indices) {
  std::vector<Vector> args;
  args.reserve(indices.size());
  for (auto i : indices) args.push_back(Vector::basis(dim, i));
  auto w = evaluate_at(id, args);
  if (w) w->indices.assign(indices.begin(), indices.end());
  return w;
}

CheckReport sweep_basis(const Identity& id, std::size_t dim) { return sweep_basis(id, dim, id.property); }

CheckReport sweep_basis(const Identity& id, std::size_t dim, Property reported_as) {
  CheckReport report{reported_as};
  if (dim == 0) return report;
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < dim; ++i) basis.push_back(Vector::basis(dim, i));

  std::vector<std::size_t> idx(id.arity, 0);
  std::vector<Vector> args(id.arity, basis[0]);
  while (true) {
    for (std::size_t a = 0; a < id.arity; ++a) args[a] = basis[idx[a]];
    if (auto w = evaluate_at(id, args)) {
      w->indices = idx;
      report.holds = false;
      report.witness = std::move(w);
      return report;
    }
    // odometer increment, last index fastest
    std::size_t pos = id.arity;
    while (pos > 0 && ++idx[pos - 1] == dim) idx[--pos] = 0;
    if (pos == 0) break;
  }
  return report;
}

CheckReport sweep_samples(const Identity& id, std::size_t dim, std::size_t count, std::uint64_t seed) {
  CheckReport report{Property::random_samples};
  Rng rng(seed);
  std::vector<Vector> args(id.arity);
  for (std::size_t s = 0; s < count; ++s) {
    for (auto& a : args) a = rng.vector(dim, kSampleBound);
    if (auto w = evaluate_at(id, args)) {
      report.holds = false;
      report.witness = std::move(w);
      break;
    }
  }
  return report;
}

Identity polarize_first(const Identity& id) {
  Identity::Sides base = id.sides;
  return Identity{Property::polarized, id.arity + 1, [base](std::span<const Vector> args) {
                    std::vector<Vector> joint(args.begin() + 1, args.end());
                    joint[0] = args[0] + args[1];
                    std::vector<Vector> first(joint);
                    first[0] = args[0];
                    std::vector<Vector> second(joint);
                    second[0] = args[1];
                    auto [l, r] = base(joint);
                    auto [l1, r1] = base(first);
                    auto [l2, r2] = base(second);
                    return std::pair{l - l1 - l2, r - r1 - r2};
                  }};
}

CheckReport all_of(Property p, std::vector<CheckReport> parts) {
  CheckReport report{p};
  for (const auto& sub : parts) {
    if (!sub.holds) {
      report.holds = false;
      report.witness = sub.witness;
      break;
    }
  }
  report.parts = std::move(parts);
  return report;
}

}  // namespace homakivis
