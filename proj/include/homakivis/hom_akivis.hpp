#pragma once

#include <string>
#include <vector>

#include "homakivis/check.hpp"
#include "homakivis/hom_algebra.hpp"
#include "homakivis/linear.hpp"

namespace homakivis {

/// (V, [-,-], [-,-,-], alpha) with a skew-symmetric bracket. The
/// Hom-Akivis identity itself is a checked property, not an invariant.
class HomAkivisAlgebra {
 public:
  /// Throws SkewSymmetryViolation when the bracket is not skew.
  HomAkivisAlgebra(BilinearMap bracket, TrilinearMap ternary, LinearMap twist,
                   std::vector<std::string> basis_names = {});

  std::size_t dim() const noexcept { return bracket_.dim(); }
  const BilinearMap& bracket() const noexcept { return bracket_; }
  const TrilinearMap& ternary() const noexcept { return ternary_; }
  const LinearMap& twist() const noexcept { return twist_; }
  const std::vector<std::string>& basis_names() const noexcept { return names_; }

 private:
  BilinearMap bracket_;
  TrilinearMap ternary_;
  LinearMap twist_;
  std::vector<std::string> names_;
};

/// (A, [-,-], alpha) with a skew-symmetric bracket: the setting of the
/// Hom-Jacobi and Hom-Malcev identities.
class HomBracketAlgebra {
 public:
  /// Throws SkewSymmetryViolation when the bracket is not skew.
  HomBracketAlgebra(BilinearMap bracket, LinearMap twist, std::vector<std::string> basis_names = {});

  /// Bracket and twist of a Hom-Akivis algebra.
  static HomBracketAlgebra of(const HomAkivisAlgebra& k);
  /// Reads a Hom-algebra with skew multiplication as a bracket algebra.
  static HomBracketAlgebra of(const HomAlgebra& h);

  std::size_t dim() const noexcept { return bracket_.dim(); }
  const BilinearMap& bracket() const noexcept { return bracket_; }
  const LinearMap& twist() const noexcept { return twist_; }
  const std::vector<std::string>& basis_names() const noexcept { return names_; }

 private:
  BilinearMap bracket_;
  LinearMap twist_;
  std::vector<std::string> names_;
};

/// f(x, y, z) + f(y, z, x) + f(z, x, y).
template <class F>
Vector cyclic_sum(F&& f, const Vector& x, const Vector& y, const Vector& z) {
  Vector s = f(x, y, z);
  s += f(y, z, x);
  s += f(z, x, y);
  return s;
}

/// Cyclic sum of [[x, y], alpha(z)].
Vector jacobi_sum(const BilinearMap& bracket, const LinearMap& twist, const Vector& x, const Vector& y,
                  const Vector& z);
/// Cyclic sum of [x, y, z].
Vector cyclic_ternary(const TrilinearMap& ternary, const Vector& x, const Vector& y, const Vector& z);

/// cyc[[x,y], alpha z] - cyc[x,y,z] + cyc[y,x,z]; zero everywhere iff K
/// satisfies the Hom-Akivis identity.
Vector hom_akivis_defect(const HomAkivisAlgebra& k, const Vector& x, const Vector& y, const Vector& z);

Identity hom_akivis_identity(const HomAkivisAlgebra& k);
CheckReport is_hom_akivis(const HomAkivisAlgebra& k);
/// The Hom-Akivis identity with the twist replaced by the identity map.
CheckReport is_akivis(const HomAkivisAlgebra& k);

Identity hom_jacobi_identity(const HomBracketAlgebra& b);
CheckReport is_hom_jacobi(const HomBracketAlgebra& b);
/// Hom-Lie algebras are exactly the Hom-Jacobi bracket algebras.
CheckReport is_hom_lie(const HomBracketAlgebra& b);
/// Jacobi identity of the bare bracket (twist ignored).
CheckReport is_jacobi(const BilinearMap& bracket);

/// Commutator bracket, Hom-associator ternary, same twist. Never rejects:
/// the identity holds for any Hom-algebra; multiplicativity of the result
/// follows from that of h and is checked by is_multiplicative.
HomAkivisAlgebra associated_hom_akivis(const HomAlgebra& h);

/// f ∘ [-,-] = {f-, f-} and f ∘ [-,-,-] = {f-, f-, f-}; with `strict`,
/// also f ∘ alpha = alpha' ∘ f.
CheckReport check_akivis_morphism(const LinearMap& f, const HomAkivisAlgebra& k, const HomAkivisAlgebra& k2,
                                  bool strict = false);
/// The twist is a self-morphism of (bracket, ternary).
CheckReport is_multiplicative(const HomAkivisAlgebra& k);

/// (V, beta ∘ [-,-], beta² ∘ [-,-,-], beta ∘ alpha). beta must be a
/// self-morphism of (bracket, ternary); throws NotMorphism otherwise.
HomAkivisAlgebra twist_by_morphism(const HomAkivisAlgebra& k, const LinearMap& beta);

/// [x, y, z] = -[z, y, x] on basis triples, with [x, y, x] = 0 on basis
/// pairs as a cross-check.
CheckReport is_hom_flexible_akivis(const HomAkivisAlgebra& k);
/// Left ([x,y,z] = -[y,x,z]) and right ([x,y,z] = -[x,z,y]) parts.
CheckReport is_hom_alternative_akivis(const HomAkivisAlgebra& k);

/// For Hom-flexible K: cyc[[x,y], alpha z] = 2 cyc[x,y,z] on all basis
/// triples, and the verdicts "Hom-Lie" and "cyc[x,y,z] = 0" (computed
/// independently) agree. Throws PreconditionFailed if K is not
/// Hom-flexible.
CheckReport check_flexible_jacobi_relation(const HomAkivisAlgebra& k);

/// For Hom-alternative K: cyc[[x,y], alpha z] = 6 [x,y,z]. The part
/// six_times_cyclic_ternary records the reading with 6 cyc[x,y,z]
/// instead; it is informational and expected to fail whenever the
/// ternary is nonzero, since cyc[x,y,z] = 3 [x,y,z] under alternation.
/// Throws PreconditionFailed if K is not Hom-alternative.
CheckReport check_alternative_jacobi_relation(const HomAkivisAlgebra& k);

/// With a = alpha x, b = alpha y, c = [x, z]:
///   cyc over (a, b, c) of [[a, b], alpha c]  -  [cyc[[x,y], alpha z], alpha² x].
Vector hom_malcev_defect(const HomBracketAlgebra& b, const Vector& x, const Vector& y, const Vector& z);
Identity hom_malcev_identity(const HomBracketAlgebra& b);
/// The Hom-Malcev identity is quadratic in x, so the basis-triple sweep
/// alone is not a proof; the report also sweeps the polarization in x
/// over all basis 4-tuples, which is exact.
CheckReport is_hom_malcev(const HomBracketAlgebra& b);
/// Malcev identity of the bare bracket (twist ignored).
CheckReport is_malcev(const BilinearMap& bracket);

/// as(alpha x, alpha y, [x, z]) = [as(x, y, z), alpha² x] for a
/// Hom-alternative Hom-algebra. Quadratic in x: checked on basis triples,
/// by polarization, and at 50 seeded random samples. Throws
/// PreconditionFailed if h is not Hom-alternative.
Identity associator_commutator_identity(const HomAlgebra& h);
CheckReport check_associator_commutator_relation(const HomAlgebra& h);

/// Hom-alternative Hom-algebra -> associated Hom-Akivis algebra is
/// Hom-alternative, satisfies the factor-6 relation, the
/// associator-commutator relation, and its bracket is Hom-Malcev.
/// Throws PreconditionFailed if h is not Hom-alternative.
CheckReport malcev_pipeline(const HomAlgebra& h);

}  // namespace homakivis
