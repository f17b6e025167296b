#pragma once

#include <string>
#include <vector>

#include "homakivis/check.hpp"
#include "homakivis/linear.hpp"

namespace homakivis {

/// A binary Hom-algebra (A, mu, alpha). No identity is assumed: every
/// property, including multiplicativity, is a computed verdict.
class HomAlgebra {
 public:
  /// Empty `basis_names` defaults to e0, e1, ...
  HomAlgebra(BilinearMap mul, LinearMap twist, std::vector<std::string> basis_names = {});

  std::size_t dim() const noexcept { return mul_.dim(); }
  const BilinearMap& mul() const noexcept { return mul_; }
  const LinearMap& twist() const noexcept { return twist_; }
  const std::vector<std::string>& basis_names() const noexcept { return names_; }

 private:
  BilinearMap mul_;
  LinearMap twist_;
  std::vector<std::string> names_;
};

std::vector<std::string> default_basis_names(std::size_t dim);

Vector commutator(const HomAlgebra& h, const Vector& x, const Vector& y);
/// Structure constants of (x, y) -> mu(x, y) - mu(y, x).
BilinearMap commutator_tensor(const BilinearMap& mul);

/// as(x, y, z) = mu(mu(x, y), alpha(z)) - mu(alpha(x), mu(y, z)).
Vector hom_associator(const HomAlgebra& h, const Vector& x, const Vector& y, const Vector& z);
TrilinearMap hom_associator_tensor(const HomAlgebra& h);

// Identities behind the predicates below, exposed so witnesses can be
// replayed and so callers can sweep them on other argument sets.
Identity associativity_identity(const BilinearMap& mul);
Identity hom_associativity_identity(const HomAlgebra& h);
/// alpha(mu(x, y)) = mu(alpha(x), alpha(y)).
Identity endomorphism_identity(const BilinearMap& mul, const LinearMap& alpha);
/// as(x, y, z) = -as(z, y, x).
Identity hom_flexible_identity(const HomAlgebra& h);
/// as(x, y, x) = 0, quadratic in x.
Identity hom_flexible_quadratic_identity(const HomAlgebra& h);
/// as(x, y, z) = -as(y, x, z).
Identity left_alternative_identity(const HomAlgebra& h);
/// as(x, y, z) = -as(x, z, y).
Identity right_alternative_identity(const HomAlgebra& h);

CheckReport is_associative(const HomAlgebra& h);
CheckReport is_hom_associative(const HomAlgebra& h);
CheckReport is_multiplicative(const HomAlgebra& h);
/// Linearized form on basis triples, plus the quadratic form on basis
/// vectors, its polarization, and seeded random samples.
CheckReport is_hom_flexible(const HomAlgebra& h);
/// Left and right skew-symmetry of the Hom-associator on basis triples.
/// The two transpositions generate S3, so this is full alternation.
CheckReport is_hom_alternative(const HomAlgebra& h);
CheckReport is_endomorphism(const BilinearMap& mul, const LinearMap& alpha);

/// For H = yau_twist(mul, alpha): as_H(x, y, z) = alpha(assoc(alpha x, alpha y, alpha z)).
Identity twisted_associator_identity(const BilinearMap& mul, const LinearMap& alpha);
CheckReport check_twisted_associator(const BilinearMap& mul, const LinearMap& alpha);

/// (A, alpha ∘ mu, alpha). alpha must be an endomorphism of (A, mu);
/// throws NotMorphism with the failing basis pair otherwise. When alpha
/// is not invertible the result is still multiplicative, but failure of
/// Hom-associativity no longer follows from non-associativity of mu.
HomAlgebra yau_twist(const BilinearMap& mul, const LinearMap& alpha, std::vector<std::string> basis_names = {});

/// alpha^{-1} ∘ mu. Throws NotInvertible for a singular twist.
BilinearMap untwist(const HomAlgebra& h);

/// f(mu_H(x, y)) = mu_G(f x, f y) and f ∘ alpha_H = alpha_G ∘ f.
CheckReport check_hom_algebra_morphism(const LinearMap& f, const HomAlgebra& h, const HomAlgebra& g);

/// Basis of the nucleus {u : assoc(u,x,y) = assoc(x,u,y) = assoc(x,y,u) = 0}.
std::vector<Vector> nucleus_basis(const BilinearMap& mul);
bool in_nucleus(const BilinearMap& mul, const Vector& u);

/// Inner twist by an invertible nuclear element u: twist x -> (u x) u^{-1}
/// and multiplication (x, y) -> (u (x y)) u^{-1}.
/// Throws NoUnit, NotInvertibleElement or NotInNucleus.
HomAlgebra inner_twist(const BilinearMap& mul, const Vector& one, const Vector& u,
                       std::vector<std::string> basis_names = {});

}  // namespace homakivis
