#include "homakivis/hom_algebra.hpp"

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

Vector classical_associator(const BilinearMap& mul, const Vector& x, const Vector& y, const Vector& z) {
  return eval_bilinear(mul, eval_bilinear(mul, x, y), z) - eval_bilinear(mul, x, eval_bilinear(mul, y, z));
}

}  // namespace

std::vector<std::string> default_basis_names(std::size_t dim) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i));
  return names;
}

HomAlgebra::HomAlgebra(BilinearMap mul, LinearMap twist, std::vector<std::string> basis_names)
    : mul_(std::move(mul)), twist_(std::move(twist)), names_(std::move(basis_names)) {
  require_dim(mul_.dim(), twist_.dim(), "Hom-algebra twist");
  if (names_.empty()) names_ = default_basis_names(mul_.dim());
  require_dim(mul_.dim(), names_.size(), "Hom-algebra basis names");
}

Vector commutator(const HomAlgebra& h, const Vector& x, const Vector& y) {
  return eval_bilinear(h.mul(), x, y) - eval_bilinear(h.mul(), y, x);
}

BilinearMap commutator_tensor(const BilinearMap& mul) {
  return BilinearMap::from_basis(mul.dim(),
                                 [&](std::size_t i, std::size_t j) { return mul.product(i, j) - mul.product(j, i); });
}

Vector hom_associator(const HomAlgebra& h, const Vector& x, const Vector& y, const Vector& z) {
  const auto& mu = h.mul();
  const auto& a = h.twist();
  return eval_bilinear(mu, eval_bilinear(mu, x, y), apply(a, z)) -
         eval_bilinear(mu, apply(a, x), eval_bilinear(mu, y, z));
}

TrilinearMap hom_associator_tensor(const HomAlgebra& h) {
  const std::size_t n = h.dim();
  return TrilinearMap::from_basis(n, [&](std::size_t i, std::size_t j, std::size_t k) {
    return hom_associator(h, Vector::basis(n, i), Vector::basis(n, j), Vector::basis(n, k));
  });
}

Identity associativity_identity(const BilinearMap& mul) {
  return {Property::associative, 3, [mul](std::span<const Vector> a) {
            return std::pair{eval_bilinear(mul, eval_bilinear(mul, a[0], a[1]), a[2]),
                             eval_bilinear(mul, a[0], eval_bilinear(mul, a[1], a[2]))};
          }};
}

Identity hom_associativity_identity(const HomAlgebra& h) {
  return {Property::hom_associative, 3, [h](std::span<const Vector> a) {
            const auto& mu = h.mul();
            const auto& t = h.twist();
            return std::pair{eval_bilinear(mu, eval_bilinear(mu, a[0], a[1]), apply(t, a[2])),
                             eval_bilinear(mu, apply(t, a[0]), eval_bilinear(mu, a[1], a[2]))};
          }};
}

Identity endomorphism_identity(const BilinearMap& mul, const LinearMap& alpha) {
  require_dim(mul.dim(), alpha.dim(), "endomorphism check");
  return {Property::multiplicative, 2, [mul, alpha](std::span<const Vector> a) {
            return std::pair{apply(alpha, eval_bilinear(mul, a[0], a[1])),
                             eval_bilinear(mul, apply(alpha, a[0]), apply(alpha, a[1]))};
          }};
}

Identity hom_flexible_identity(const HomAlgebra& h) {
  return {Property::linearized, 3, [h](std::span<const Vector> a) {
            return std::pair{hom_associator(h, a[0], a[1], a[2]), -hom_associator(h, a[2], a[1], a[0])};
          }};
}

Identity hom_flexible_quadratic_identity(const HomAlgebra& h) {
  return {Property::quadratic, 2, [h](std::span<const Vector> a) {
            return std::pair{hom_associator(h, a[0], a[1], a[0]), Vector(h.dim())};
          }};
}

Identity left_alternative_identity(const HomAlgebra& h) {
  return {Property::left_alternative, 3, [h](std::span<const Vector> a) {
            return std::pair{hom_associator(h, a[0], a[1], a[2]), -hom_associator(h, a[1], a[0], a[2])};
          }};
}

Identity right_alternative_identity(const HomAlgebra& h) {
  return {Property::right_alternative, 3, [h](std::span<const Vector> a) {
            return std::pair{hom_associator(h, a[0], a[1], a[2]), -hom_associator(h, a[0], a[2], a[1])};
          }};
}

CheckReport is_associative(const HomAlgebra& h) { return sweep_basis(associativity_identity(h.mul()), h.dim()); }

CheckReport is_hom_associative(const HomAlgebra& h) {
  return sweep_basis(hom_associativity_identity(h), h.dim());
}

CheckReport is_endomorphism(const BilinearMap& mul, const LinearMap& alpha) {
  return sweep_basis(endomorphism_identity(mul, alpha), mul.dim());
}

CheckReport is_multiplicative(const HomAlgebra& h) { return is_endomorphism(h.mul(), h.twist()); }

CheckReport is_hom_flexible(const HomAlgebra& h) {
  const Identity quadratic = hom_flexible_quadratic_identity(h);
  return all_of(Property::hom_flexible, {
                                            sweep_basis(hom_flexible_identity(h), h.dim()),
                                            sweep_basis(quadratic, h.dim()),
                                            sweep_basis(polarize_first(quadratic), h.dim()),
                                            sweep_samples(quadratic, h.dim(), 50),
                                        });
}

CheckReport is_hom_alternative(const HomAlgebra& h) {
  return all_of(Property::hom_alternative, {
                                               sweep_basis(left_alternative_identity(h), h.dim()),
                                               sweep_basis(right_alternative_identity(h), h.dim()),
                                           });
}

Identity twisted_associator_identity(const BilinearMap& mul, const LinearMap& alpha) {
  const HomAlgebra twisted(compose(alpha, mul), alpha);
  return {Property::twisted_associator, 3, [mul, alpha, twisted](std::span<const Vector> a) {
            return std::pair{hom_associator(twisted, a[0], a[1], a[2]),
                             apply(alpha, classical_associator(mul, apply(alpha, a[0]), apply(alpha, a[1]),
                                                               apply(alpha, a[2])))};
          }};
}

CheckReport check_twisted_associator(const BilinearMap& mul, const LinearMap& alpha) {
  return sweep_basis(twisted_associator_identity(mul, alpha), mul.dim());
}

HomAlgebra yau_twist(const BilinearMap& mul, const LinearMap& alpha, std::vector<std::string> basis_names) {
  CheckReport endo = is_endomorphism(mul, alpha);
  if (!endo.holds) throw NotMorphism("twist map is not an endomorphism of the multiplication", std::move(endo));
  return HomAlgebra(compose(alpha, mul), alpha, std::move(basis_names));
}

BilinearMap untwist(const HomAlgebra& h) { return compose(invert(h.twist()), h.mul()); }

CheckReport check_hom_algebra_morphism(const LinearMap& f, const HomAlgebra& h, const HomAlgebra& g) {
  require_dim(h.dim(), f.dim(), "morphism source");
  require_dim(g.dim(), f.dim(), "morphism target");
  const Identity product{Property::preserves_product, 2, [&](std::span<const Vector> a) {
                           return std::pair{apply(f, eval_bilinear(h.mul(), a[0], a[1])),
                                            eval_bilinear(g.mul(), apply(f, a[0]), apply(f, a[1]))};
                         }};
  const Identity twist{Property::commutes_with_twist, 1, [&](std::span<const Vector> a) {
                         return std::pair{apply(f, apply(h.twist(), a[0])), apply(g.twist(), apply(f, a[0]))};
                       }};
  return all_of(Property::morphism, {sweep_basis(product, f.dim()), sweep_basis(twist, f.dim())});
}

std::vector<Vector> nucleus_basis(const BilinearMap& mul) {
  const std::size_t n = mul.dim();
  // assoc(u, x, y), assoc(x, u, y), assoc(x, y, u) are linear in u; stack
  // their coordinate rows over all basis pairs (x, y) and take the kernel.
  Matrix system(3 * n * n * n, n);
  std::size_t row = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const Vector ea = Vector::basis(n, a);
      const Vector eb = Vector::basis(n, b);
      for (int slot = 0; slot < 3; ++slot) {
        for (std::size_t m = 0; m < n; ++m) {
          const Vector em = Vector::basis(n, m);
          const Vector v = slot == 0   ? classical_associator(mul, em, ea, eb)
                           : slot == 1 ? classical_associator(mul, ea, em, eb)
                                       : classical_associator(mul, ea, eb, em);
          for (std::size_t r = 0; r < n; ++r) system(row + r, m) = v[r];
        }
        row += n;
      }
    }
  }
  return null_space(system);
}

bool in_nucleus(const BilinearMap& mul, const Vector& u) {
  const std::size_t n = mul.dim();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const Vector ea = Vector::basis(n, a);
      const Vector eb = Vector::basis(n, b);
      if (!classical_associator(mul, u, ea, eb).is_zero() || !classical_associator(mul, ea, u, eb).is_zero() ||
          !classical_associator(mul, ea, eb, u).is_zero()) {
        return false;
      }
    }
  }
  return true;
}

HomAlgebra inner_twist(const BilinearMap& mul, const Vector& one, const Vector& u,
                       std::vector<std::string> basis_names) {
  const std::size_t n = mul.dim();
  require_dim(n, one.dim(), "inner twist unit");
  require_dim(n, u.dim(), "inner twist element");
  for (std::size_t i = 0; i < n; ++i) {
    const Vector ei = Vector::basis(n, i);
    if (eval_bilinear(mul, one, ei) != ei || eval_bilinear(mul, ei, one) != ei) {
      throw NoUnit("given element is not a two-sided unit (fails at basis vector " + std::to_string(i) + ")");
    }
  }

  // u^{-1} solves u x = 1 and x u = 1, with the same x.
  Matrix left(n, n);
  Matrix right(n, n);
  for (std::size_t m = 0; m < n; ++m) {
    const Vector em = Vector::basis(n, m);
    const Vector l = eval_bilinear(mul, u, em);
    const Vector r = eval_bilinear(mul, em, u);
    for (std::size_t k = 0; k < n; ++k) {
      left(k, m) = l[k];
      right(k, m) = r[k];
    }
  }
  const auto right_inverse = solve_unique(left, one);
  const auto left_inverse = solve_unique(right, one);
  if (!right_inverse || !left_inverse || *right_inverse != *left_inverse) {
    throw NotInvertibleElement("element has no two-sided inverse");
  }
  const Vector& u_inv = *right_inverse;
  if (!in_nucleus(mul, u)) throw NotInNucleus("element is not in the nucleus");
  if (!in_nucleus(mul, u_inv)) throw NotInNucleus("inverse element is not in the nucleus");

  std::vector<Vector> images;
  for (std::size_t j = 0; j < n; ++j) {
    images.push_back(eval_bilinear(mul, eval_bilinear(mul, u, Vector::basis(n, j)), u_inv));
  }
  return yau_twist(mul, LinearMap::from_images(images), std::move(basis_names));
}

}  // namespace homakivis
