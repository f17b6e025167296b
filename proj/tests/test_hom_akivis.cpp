#include <catch_amalgamated.hpp>

#include "homakivis/catalog.hpp"
#include "homakivis/errors.hpp"
#include "homakivis/hom_akivis.hpp"

using namespace homakivis;

namespace {

Vector e(std::size_t n, std::size_t i) { return Vector::basis(n, i); }

std::vector<std::size_t> idx(std::initializer_list<std::size_t> l) { return l; }

HomAkivisAlgebra sl2_akivis(const LinearMap& twist) {
  return HomAkivisAlgebra(build_sl2().mul(), TrilinearMap(3), twist);
}

}  // namespace

TEST_CASE("cyclic sums") {
  const Vector x{1, 0}, y{0, 1}, z{2, 3};
  CHECK(cyclic_sum([](const Vector& a, const Vector&, const Vector&) { return a; }, x, y, z) == Vector{3, 4});
  CHECK(cyclic_sum([](const Vector&, const Vector&, const Vector&) { return Vector(2); }, x, y, z).is_zero());
  const HomAlgebra s = build_sl2();
  CHECK(jacobi_sum(s.mul(), LinearMap::identity(3), e(3, 0), e(3, 1), e(3, 2)).is_zero());
}

TEST_CASE("brackets must be skew") {
  CHECK_THROWS_AS(HomAkivisAlgebra(build_myung5().mul(), TrilinearMap(5), LinearMap::identity(5)),
                  SkewSymmetryViolation);
  CHECK_THROWS_AS(HomBracketAlgebra(build_myung5().mul(), LinearMap::identity(5)), SkewSymmetryViolation);
  CHECK_THROWS_AS(HomAkivisAlgebra(BilinearMap(2), TrilinearMap(3), LinearMap::identity(2)), DimensionMismatch);
}

TEST_CASE("Lie brackets with zero ternary") {
  const HomAkivisAlgebra id = sl2_akivis(LinearMap::identity(3));
  CHECK(is_hom_akivis(id).holds);
  CHECK(is_akivis(id).holds);
  CHECK(is_hom_jacobi(HomBracketAlgebra::of(id)).holds);
  CHECK(is_malcev(id.bracket()).holds);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) CHECK(hom_akivis_defect(id, e(3, i), e(3, j), e(3, k)).is_zero());

  const HomAkivisAlgebra twisted = sl2_akivis(build_sl2().twist());
  CHECK(hom_akivis_defect(twisted, e(3, 0), e(3, 1), e(3, 2)).is_zero());
  CHECK(is_hom_jacobi(HomBracketAlgebra::of(twisted)).holds);
  CHECK(is_hom_lie(HomBracketAlgebra::of(twisted)).holds);
}

TEST_CASE("a lone ternary entry breaks the identity") {
  TrilinearMap t(3);
  t.set(0, 1, 2, 0, 1);
  const HomAkivisAlgebra k(BilinearMap(3), t, LinearMap::identity(3));
  const CheckReport r = is_hom_akivis(k);
  CHECK_FALSE(r.holds);
  CHECK(r.witness->indices == idx({0, 1, 2}));
  CHECK(r.witness->lhs.is_zero());
  CHECK(r.witness->rhs == Vector{1, 0, 0});
}

TEST_CASE("associated structure of myung5") {
  const HomAlgebra h = build_myung5();
  const HomAkivisAlgebra k = associated_hom_akivis(h);
  CHECK(k.bracket() == build_kuzmin5().bracket());
  CHECK(eval_bilinear(k.bracket(), e(5, 0), e(5, 1)) == e(5, 3));
  CHECK(is_hom_akivis(k).holds);
  CHECK(is_multiplicative(k).holds);
  CHECK(check_akivis_morphism(k.twist(), k, k).holds);

  // The ternary is the Hom-associator, which is not flexible here.
  CHECK_FALSE(is_hom_flexible_akivis(k).holds);
  CHECK_FALSE(is_hom_alternative_akivis(k).holds);
  CHECK_THROWS_AS(check_flexible_jacobi_relation(k), PreconditionFailed);
  CHECK_THROWS_AS(check_alternative_jacobi_relation(k), PreconditionFailed);
  CHECK_THROWS_AS(malcev_pipeline(h), PreconditionFailed);
  CHECK_THROWS_AS(check_associator_commutator_relation(h), PreconditionFailed);

  CHECK(is_hom_lie(HomBracketAlgebra::of(k)).holds);
  CHECK(is_hom_malcev(HomBracketAlgebra::of(k)).holds);
}

TEST_CASE("flexible-Jacobi relation on a flexible instance") {
  // Ternary [x, y, z] = -[z, y, x] with a nonzero cyclic sum; zero bracket.
  TrilinearMap t(3);
  t.set(0, 1, 2, 0, 1);
  t.set(2, 1, 0, 0, -1);
  const HomAkivisAlgebra flexible(BilinearMap(3), t, LinearMap::identity(3));
  REQUIRE(is_hom_flexible_akivis(flexible).holds);
  const CheckReport r = check_flexible_jacobi_relation(flexible);
  // The zero bracket is Hom-Lie, the cyclic ternary is not zero: the
  // structure is not Hom-Akivis, and the relation reports it.
  CHECK_FALSE(r.part(Property::twice_cyclic_ternary)->holds);
  CHECK(r.part(Property::hom_jacobi)->holds);
  CHECK_FALSE(r.part(Property::cyclic_ternary_zero)->holds);
  CHECK_FALSE(r.part(Property::hom_lie_iff_cyclic_zero)->holds);
  CHECK_FALSE(r.holds);

  const HomAkivisAlgebra zero(build_sl2().mul(), TrilinearMap(3), LinearMap::identity(3));
  const CheckReport z = check_flexible_jacobi_relation(zero);
  CHECK(z.holds);
  CHECK(z.part(Property::hom_lie_iff_cyclic_zero)->holds);
}

TEST_CASE("Kuzmin bracket and the Malcev identity") {
  const HomBracketAlgebra k = build_kuzmin5();
  const HomAlgebra as_algebra = build_kuzmin5_hom_algebra();
  const Vector e3 = e(5, 2), e4 = e(5, 3);
  CHECK(eval_bilinear(k.bracket(), eval_bilinear(k.bracket(), e3, e4), apply(k.twist(), e4)) == -1 * e3);
  CHECK(hom_associator(as_algebra, e3, e4, e4) == -1 * e3);
  CHECK(is_multiplicative(as_algebra).holds);

  const CheckReport hj = is_jacobi(k.bracket());
  CHECK_FALSE(hj.holds);
  CHECK(hj.witness->indices == idx({0, 1, 2}));
  CHECK(hj.witness->lhs == Vector{0, 0, -1, 0, 0});

  // Every basis triple passes, the polarized form does not.
  const CheckReport m = is_malcev(k.bracket());
  CHECK(m.part(Property::basis_triples)->holds);
  CHECK_FALSE(m.part(Property::polarized)->holds);
  CHECK(m.part(Property::polarized)->witness->indices == idx({0, 1, 2, 3}));
  CHECK_FALSE(m.holds);

  CHECK(is_hom_malcev(k).holds);
  const HomBracketAlgebra twisted(compose(k.twist(), k.bracket()), k.twist());
  CHECK(is_hom_malcev(twisted).holds);
}

TEST_CASE("twisting by morphisms") {
  const HomAkivisAlgebra k = associated_hom_akivis(build_myung5());
  const HomAkivisAlgebra same = twist_by_morphism(k, LinearMap::identity(5));
  CHECK(same.bracket() == k.bracket());
  CHECK(same.ternary() == k.ternary());

  const HomAkivisAlgebra kb = twist_by_morphism(k, k.twist());
  CHECK(is_hom_akivis(kb).holds);
  CHECK(is_multiplicative(kb).holds);
  CHECK(kb.twist() == compose(k.twist(), k.twist()));

  // An Akivis algebra (identity twist) twisted by an endomorphism.
  const HomAlgebra s = build_sl2();
  const HomAkivisAlgebra lie(s.mul(), TrilinearMap(3), LinearMap::identity(3));
  const HomAkivisAlgebra lb = twist_by_morphism(lie, s.twist());
  CHECK(lb.twist() == s.twist());
  CHECK(is_hom_akivis(lb).holds);
  CHECK(is_multiplicative(lb).holds);

  Matrix scale = Matrix::identity(3);
  scale(0, 0) = 2;
  const LinearMap f(scale);
  const CheckReport r = check_akivis_morphism(f, lie, lie);
  CHECK_FALSE(r.holds);
  CHECK(r.witness);
  CHECK_THROWS_AS(twist_by_morphism(lie, f), NotMorphism);
  CHECK(check_akivis_morphism(LinearMap::identity(3), lie, lie, true).holds);
  CHECK(check_akivis_morphism(s.twist(), lie, lie, false).holds);
}

TEST_CASE("octonion pipeline") {
  const HomAlgebra o = build_octonions_twisted();
  const HomAkivisAlgebra k = associated_hom_akivis(o);
  CHECK(is_hom_alternative_akivis(k).holds);

  const CheckReport six = check_alternative_jacobi_relation(k);
  CHECK(six.holds);
  CHECK(six.part(Property::six_times_ternary)->holds);
  const CheckReport* literal = six.part(Property::six_times_cyclic_ternary);
  CHECK_FALSE(literal->holds);
  CHECK(literal->witness->indices == idx({1, 2, 3}));

  const CheckReport ac = check_associator_commutator_relation(o);
  CHECK(ac.holds);
  CHECK(ac.parts.size() == 3);

  const CheckReport p = malcev_pipeline(o);
  CHECK(p.holds);
  CHECK(p.parts.size() == 5);
  CHECK(is_malcev(commutator_tensor(build_octonions())).holds);
}

TEST_CASE("associator-commutator relation catches a perturbation") {
  const HomAlgebra o = build_octonions_twisted();
  BilinearMap mul = o.mul();
  mul.set(1, 2, 4, mul.at(1, 2, 4) + 1);
  const HomAlgebra bent(mul, o.twist());
  // The perturbed algebra is no longer Hom-alternative, so check the
  // identity directly.
  CHECK_THROWS_AS(check_associator_commutator_relation(bent), PreconditionFailed);
  const CheckReport r = sweep_basis(associator_commutator_identity(bent), 8);
  const CheckReport p = sweep_basis(polarize_first(associator_commutator_identity(bent)), 8);
  CHECK_FALSE((r.holds && p.holds));
}

TEST_CASE("associative commutative algebra passes the pipeline") {
  BilinearMap mul(2);
  mul.set(0, 0, 0, 1);
  mul.set(0, 1, 1, 1);
  mul.set(1, 0, 1, 1);
  const HomAlgebra h(mul, LinearMap::identity(2));
  CHECK(malcev_pipeline(h).holds);
  CHECK(associated_hom_akivis(h).ternary().is_zero());
}
