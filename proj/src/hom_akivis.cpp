#include "homakivis/hom_akivis.hpp"

#include <string>

#include "homakivis/errors.hpp"

namespace homakivis {

namespace {

void require_dim(std::size_t expected, std::size_t got, const char* what) {
  if (expected != got) {
    throw DimensionMismatch(std::string(what) + ": dimension " + std::to_string(got) + ", expected " +
                            std::to_string(expected));
  }
}

void require_skew(const BilinearMap& bracket) {
  if (bracket.is_skew()) return;
  const std::size_t n = bracket.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (bracket.at(i, j, k) != -bracket.at(j, i, k)) {
          throw SkewSymmetryViolation("bracket is not skew-symmetric at (" + std::to_string(i) + ", " +
                                      std::to_string(j) + ") coordinate " + std::to_string(k));
        }
      }
    }
  }
}

std::vector<std::string> names_or_default(std::vector<std::string> names, std::size_t dim) {
  if (names.empty()) return default_basis_names(dim);
  require_dim(dim, names.size(), "basis names");
  return names;
}

CheckReport sweep_relation(Property p, std::size_t arity, std::size_t dim, Identity::Sides sides) {
  return sweep_basis(Identity{p, arity, std::move(sides)}, dim);
}

/// Report with the given parts whose verdict is decided by `gate` alone.
CheckReport gated(Property p, const CheckReport& gate, std::vector<CheckReport> parts) {
  CheckReport report{p, gate.holds, gate.witness, std::move(parts)};
  return report;
}

}  // namespace

HomAkivisAlgebra::HomAkivisAlgebra(BilinearMap bracket, TrilinearMap ternary, LinearMap twist,
                                   std::vector<std::string> basis_names)
    : bracket_(std::move(bracket)), ternary_(std::move(ternary)), twist_(std::move(twist)) {
  require_dim(bracket_.dim(), ternary_.dim(), "Hom-Akivis ternary");
  require_dim(bracket_.dim(), twist_.dim(), "Hom-Akivis twist");
  require_skew(bracket_);
  names_ = names_or_default(std::move(basis_names), bracket_.dim());
}

HomBracketAlgebra::HomBracketAlgebra(BilinearMap bracket, LinearMap twist, std::vector<std::string> basis_names)
    : bracket_(std::move(bracket)), twist_(std::move(twist)) {
  require_dim(bracket_.dim(), twist_.dim(), "bracket algebra twist");
  require_skew(bracket_);
  names_ = names_or_default(std::move(basis_names), bracket_.dim());
}

HomBracketAlgebra HomBracketAlgebra::of(const HomAkivisAlgebra& k) {
  return HomBracketAlgebra(k.bracket(), k.twist(), k.basis_names());
}

HomBracketAlgebra HomBracketAlgebra::of(const HomAlgebra& h) {
  return HomBracketAlgebra(h.mul(), h.twist(), h.basis_names());
}

Vector jacobi_sum(const BilinearMap& bracket, const LinearMap& twist, const Vector& x, const Vector& y,
                  const Vector& z) {
  return cyclic_sum(
      [&](const Vector& p, const Vector& q, const Vector& r) {
        return eval_bilinear(bracket, eval_bilinear(bracket, p, q), apply(twist, r));
      },
      x, y, z);
}

Vector cyclic_ternary(const TrilinearMap& ternary, const Vector& x, const Vector& y, const Vector& z) {
  return cyclic_sum([&](const Vector& p, const Vector& q, const Vector& r) { return eval_trilinear(ternary, p, q, r); },
                    x, y, z);
}

namespace {

std::pair<Vector, Vector> akivis_sides(const BilinearMap& bracket, const TrilinearMap& ternary,
                                       const LinearMap& twist, std::span<const Vector> a) {
  return {jacobi_sum(bracket, twist, a[0], a[1], a[2]),
          cyclic_ternary(ternary, a[0], a[1], a[2]) - cyclic_ternary(ternary, a[1], a[0], a[2])};
}

}  // namespace

Vector hom_akivis_defect(const HomAkivisAlgebra& k, const Vector& x, const Vector& y, const Vector& z) {
  const Vector args[] = {x, y, z};
  auto [lhs, rhs] = akivis_sides(k.bracket(), k.ternary(), k.twist(), args);
  return lhs - rhs;
}

Identity hom_akivis_identity(const HomAkivisAlgebra& k) {
  return {Property::hom_akivis, 3,
          [k](std::span<const Vector> a) { return akivis_sides(k.bracket(), k.ternary(), k.twist(), a); }};
}

CheckReport is_hom_akivis(const HomAkivisAlgebra& k) { return sweep_basis(hom_akivis_identity(k), k.dim()); }

CheckReport is_akivis(const HomAkivisAlgebra& k) {
  const HomAkivisAlgebra untwisted(k.bracket(), k.ternary(), LinearMap::identity(k.dim()), k.basis_names());
  return sweep_basis(hom_akivis_identity(untwisted), k.dim(), Property::akivis);
}

Identity hom_jacobi_identity(const HomBracketAlgebra& b) {
  return {Property::hom_jacobi, 3, [b](std::span<const Vector> a) {
            return std::pair{jacobi_sum(b.bracket(), b.twist(), a[0], a[1], a[2]), Vector(b.dim())};
          }};
}

CheckReport is_hom_jacobi(const HomBracketAlgebra& b) { return sweep_basis(hom_jacobi_identity(b), b.dim()); }

CheckReport is_hom_lie(const HomBracketAlgebra& b) { return is_hom_jacobi(b); }

CheckReport is_jacobi(const BilinearMap& bracket) {
  const HomBracketAlgebra plain(bracket, LinearMap::identity(bracket.dim()));
  return sweep_basis(hom_jacobi_identity(plain), bracket.dim(), Property::jacobi);
}

HomAkivisAlgebra associated_hom_akivis(const HomAlgebra& h) {
  return HomAkivisAlgebra(commutator_tensor(h.mul()), hom_associator_tensor(h), h.twist(), h.basis_names());
}

CheckReport check_akivis_morphism(const LinearMap& f, const HomAkivisAlgebra& k, const HomAkivisAlgebra& k2,
                                  bool strict) {
  require_dim(k.dim(), f.dim(), "Akivis morphism source");
  require_dim(k2.dim(), f.dim(), "Akivis morphism target");
  std::vector<CheckReport> parts;
  parts.push_back(sweep_relation(Property::preserves_bracket, 2, f.dim(), [&](std::span<const Vector> a) {
    return std::pair{apply(f, eval_bilinear(k.bracket(), a[0], a[1])),
                     eval_bilinear(k2.bracket(), apply(f, a[0]), apply(f, a[1]))};
  }));
  parts.push_back(sweep_relation(Property::preserves_ternary, 3, f.dim(), [&](std::span<const Vector> a) {
    return std::pair{apply(f, eval_trilinear(k.ternary(), a[0], a[1], a[2])),
                     eval_trilinear(k2.ternary(), apply(f, a[0]), apply(f, a[1]), apply(f, a[2]))};
  }));
  if (strict) {
    parts.push_back(sweep_relation(Property::commutes_with_twist, 1, f.dim(), [&](std::span<const Vector> a) {
      return std::pair{apply(f, apply(k.twist(), a[0])), apply(k2.twist(), apply(f, a[0]))};
    }));
  }
  return all_of(Property::akivis_morphism, std::move(parts));
}

CheckReport is_multiplicative(const HomAkivisAlgebra& k) {
  CheckReport r = check_akivis_morphism(k.twist(), k, k);
  r.property = Property::multiplicative;
  return r;
}

HomAkivisAlgebra twist_by_morphism(const HomAkivisAlgebra& k, const LinearMap& beta) {
  CheckReport morphism = check_akivis_morphism(beta, k, k);
  if (!morphism.holds) {
    throw NotMorphism("map is not a self-morphism of the bracket and ternary operations", std::move(morphism));
  }
  return HomAkivisAlgebra(compose(beta, k.bracket()), compose(compose(beta, beta), k.ternary()),
                          compose(beta, k.twist()), k.basis_names());
}

CheckReport is_hom_flexible_akivis(const HomAkivisAlgebra& k) {
  const TrilinearMap& t = k.ternary();
  return all_of(Property::hom_flexible,
                {
                    sweep_relation(Property::linearized, 3, k.dim(),
                                   [&](std::span<const Vector> a) {
                                     return std::pair{eval_trilinear(t, a[0], a[1], a[2]),
                                                      -eval_trilinear(t, a[2], a[1], a[0])};
                                   }),
                    sweep_relation(Property::quadratic, 2, k.dim(),
                                   [&](std::span<const Vector> a) {
                                     return std::pair{eval_trilinear(t, a[0], a[1], a[0]), Vector(k.dim())};
                                   }),
                });
}

CheckReport is_hom_alternative_akivis(const HomAkivisAlgebra& k) {
  const TrilinearMap& t = k.ternary();
  return all_of(Property::hom_alternative,
                {
                    sweep_relation(Property::left_alternative, 3, k.dim(),
                                   [&](std::span<const Vector> a) {
                                     return std::pair{eval_trilinear(t, a[0], a[1], a[2]),
                                                      -eval_trilinear(t, a[1], a[0], a[2])};
                                   }),
                    sweep_relation(Property::right_alternative, 3, k.dim(),
                                   [&](std::span<const Vector> a) {
                                     return std::pair{eval_trilinear(t, a[0], a[1], a[2]),
                                                      -eval_trilinear(t, a[0], a[2], a[1])};
                                   }),
                });
}

CheckReport check_flexible_jacobi_relation(const HomAkivisAlgebra& k) {
  CheckReport flexible = is_hom_flexible_akivis(k);
  if (!flexible.holds) throw PreconditionFailed("Hom-Akivis algebra is not Hom-flexible", std::move(flexible));

  const auto& br = k.bracket();
  const auto& t = k.ternary();
  const auto& tw = k.twist();
  CheckReport twice = sweep_relation(Property::twice_cyclic_ternary, 3, k.dim(), [&](std::span<const Vector> a) {
    return std::pair{jacobi_sum(br, tw, a[0], a[1], a[2]), Scalar(2) * cyclic_ternary(t, a[0], a[1], a[2])};
  });
  CheckReport hom_lie = is_hom_lie(HomBracketAlgebra::of(k));
  CheckReport cyclic_zero = sweep_relation(Property::cyclic_ternary_zero, 3, k.dim(), [&](std::span<const Vector> a) {
    return std::pair{cyclic_ternary(t, a[0], a[1], a[2]), Vector(k.dim())};
  });

  CheckReport iff{Property::hom_lie_iff_cyclic_zero};
  if (hom_lie.holds != cyclic_zero.holds) {
    iff.holds = false;
    iff.witness = hom_lie.holds ? cyclic_zero.witness : hom_lie.witness;
  }

  CheckReport report{Property::flexible_jacobi_relation};
  for (const CheckReport* gate : {&twice, &iff}) {
    if (!gate->holds) {
      report.holds = false;
      report.witness = gate->witness;
      break;
    }
  }
  report.parts = {std::move(twice), std::move(hom_lie), std::move(cyclic_zero), std::move(iff)};
  return report;
}

CheckReport check_alternative_jacobi_relation(const HomAkivisAlgebra& k) {
  CheckReport alternative = is_hom_alternative_akivis(k);
  if (!alternative.holds) {
    throw PreconditionFailed("Hom-Akivis algebra is not Hom-alternative", std::move(alternative));
  }
  const auto& br = k.bracket();
  const auto& t = k.ternary();
  const auto& tw = k.twist();
  CheckReport six = sweep_relation(Property::six_times_ternary, 3, k.dim(), [&](std::span<const Vector> a) {
    return std::pair{jacobi_sum(br, tw, a[0], a[1], a[2]), Scalar(6) * eval_trilinear(t, a[0], a[1], a[2])};
  });
  CheckReport literal = sweep_relation(Property::six_times_cyclic_ternary, 3, k.dim(), [&](std::span<const Vector> a) {
    return std::pair{jacobi_sum(br, tw, a[0], a[1], a[2]), Scalar(6) * cyclic_ternary(t, a[0], a[1], a[2])};
  });
  const CheckReport gate = six;
  return gated(Property::alternative_jacobi_relation, gate, {std::move(six), std::move(literal)});
}

Vector hom_malcev_defect(const HomBracketAlgebra& b, const Vector& x, const Vector& y, const Vector& z) {
  const Vector args[] = {x, y, z};
  auto [lhs, rhs] = hom_malcev_identity(b).sides(args);
  return lhs - rhs;
}

Identity hom_malcev_identity(const HomBracketAlgebra& b) {
  return {Property::hom_malcev, 3, [b](std::span<const Vector> a) {
            const auto& br = b.bracket();
            const auto& tw = b.twist();
            const Vector& x = a[0];
            const Vector zx = eval_bilinear(br, x, a[2]);
            const Vector lhs = jacobi_sum(br, tw, apply(tw, x), apply(tw, a[1]), zx);
            const Vector rhs = eval_bilinear(br, jacobi_sum(br, tw, x, a[1], a[2]), apply(tw, apply(tw, x)));
            return std::pair{lhs, rhs};
          }};
}

CheckReport is_hom_malcev(const HomBracketAlgebra& b) {
  const Identity id = hom_malcev_identity(b);
  return all_of(Property::hom_malcev, {
                                          sweep_basis(id, b.dim(), Property::basis_triples),
                                          sweep_basis(polarize_first(id), b.dim()),
                                      });
}

CheckReport is_malcev(const BilinearMap& bracket) {
  CheckReport r = is_hom_malcev(HomBracketAlgebra(bracket, LinearMap::identity(bracket.dim())));
  r.property = Property::malcev;
  return r;
}

Identity associator_commutator_identity(const HomAlgebra& h) {
  return {Property::associator_commutator_relation, 3, [h](std::span<const Vector> a) {
            const auto& tw = h.twist();
            const Vector& x = a[0];
            const Vector lhs = hom_associator(h, apply(tw, x), apply(tw, a[1]), commutator(h, x, a[2]));
            const Vector rhs = commutator(h, hom_associator(h, x, a[1], a[2]), apply(tw, apply(tw, x)));
            return std::pair{lhs, rhs};
          }};
}

CheckReport check_associator_commutator_relation(const HomAlgebra& h) {
  CheckReport alternative = is_hom_alternative(h);
  if (!alternative.holds) throw PreconditionFailed("Hom-algebra is not Hom-alternative", std::move(alternative));
  const Identity id = associator_commutator_identity(h);
  return all_of(Property::associator_commutator_relation, {
                                                              sweep_basis(id, h.dim(), Property::basis_triples),
                                                              sweep_basis(polarize_first(id), h.dim()),
                                                              sweep_samples(id, h.dim(), 50),
                                                          });
}

CheckReport malcev_pipeline(const HomAlgebra& h) {
  CheckReport alternative = is_hom_alternative(h);
  if (!alternative.holds) throw PreconditionFailed("Hom-algebra is not Hom-alternative", std::move(alternative));
  const HomAkivisAlgebra k = associated_hom_akivis(h);
  std::vector<CheckReport> stages;
  stages.push_back(is_hom_akivis(k));
  stages.push_back(is_hom_alternative_akivis(k));
  stages.push_back(check_alternative_jacobi_relation(k));
  stages.push_back(check_associator_commutator_relation(h));
  stages.push_back(is_hom_malcev(HomBracketAlgebra::of(k)));
  return all_of(Property::malcev_pipeline, std::move(stages));
}

}  // namespace homakivis
