#include <catch_amalgamated.hpp>

#include "homakivis/catalog.hpp"
#include "homakivis/errors.hpp"
#include "homakivis/hom_algebra.hpp"

using namespace homakivis;

namespace {

Vector e(std::size_t n, std::size_t i) { return Vector::basis(n, i); }

std::vector<std::size_t> idx(std::initializer_list<std::size_t> l) { return l; }

}  // namespace

TEST_CASE("three-dimensional family at a = 1, b = 2") {
  const HomAlgebra h = build_three_dim_family(1, 2);
  const Vector u = e(3, 0), v = e(3, 1), w = e(3, 2);
  const auto& mu = h.mul();
  const auto& alpha = h.twist();

  CHECK(eval_bilinear(mu, eval_bilinear(mu, u, v), apply(alpha, w)) == 2 * v);
  CHECK(eval_bilinear(mu, apply(alpha, u), eval_bilinear(mu, v, w)) == 4 * w);
  CHECK(hom_associator(h, u, v, w) == Vector{0, 2, -4});

  const CheckReport ha = is_hom_associative(h);
  CHECK_FALSE(ha.holds);
  CHECK(ha.witness->indices == idx({0, 0, 1}));
  CHECK(ha.witness->lhs == Vector{0, 0, 2});
  CHECK(ha.witness->rhs == Vector{0, 1, 0});
  const auto at_uvw = witness_at(hom_associativity_identity(h), 3, idx({0, 1, 2}));
  REQUIRE(at_uvw);
  CHECK(at_uvw->lhs == Vector{0, 2, 0});
  CHECK(at_uvw->rhs == Vector{0, 0, 4});

  const CheckReport as = is_associative(h);
  CHECK_FALSE(as.holds);
  CHECK(as.witness->indices == idx({0, 0, 2}));
  const auto at_vvw = witness_at(associativity_identity(mu), 3, idx({1, 1, 2}));
  REQUIRE(at_vvw);
  CHECK(at_vvw->lhs == Vector{0, 0, 2});
  CHECK(at_vvw->rhs == Vector{0, 0, 4});

  const CheckReport mult = is_multiplicative(h);
  CHECK_FALSE(mult.holds);
  CHECK(mult.witness->indices == idx({0, 1}));
  CHECK(mult.witness->lhs == Vector{0, 0, 1});
  CHECK(mult.witness->rhs == Vector{0, 0, 2});

  CHECK_THROWS_AS(build_three_dim_family(0, 2), ZeroParameter);
  CHECK_THROWS_AS(build_three_dim_family(1, 0), ZeroParameter);
}

TEST_CASE("sl2 with its swap twist") {
  const HomAlgebra h = build_sl2();
  const Vector u = e(3, 0), v = e(3, 1), w = e(3, 2);
  const auto& br = h.mul();
  CHECK(eval_bilinear(br, eval_bilinear(br, u, w), apply(h.twist(), w)) == 2 * u);
  CHECK(eval_bilinear(br, apply(h.twist(), u), eval_bilinear(br, w, w)).is_zero());
  CHECK(is_multiplicative(h).holds);

  const CheckReport ha = is_hom_associative(h);
  CHECK_FALSE(ha.holds);
  CHECK(ha.witness->indices == idx({0, 0, 1}));
  CHECK(ha.witness->lhs.is_zero());
  CHECK(ha.witness->rhs == Vector{0, 2, 0});
  const auto at_uww = witness_at(hom_associativity_identity(h), 3, idx({0, 2, 2}));
  REQUIRE(at_uww);
  CHECK(at_uww->lhs == 2 * u);
  CHECK(at_uww->rhs.is_zero());

  CHECK(nucleus_basis(br).empty());
  CHECK(commutator(h, u, u).is_zero());
}

TEST_CASE("myung5") {
  const HomAlgebra h = build_myung5();
  const Vector e3 = e(5, 2), e4 = e(5, 3);
  CHECK(is_multiplicative(h).holds);
  CHECK(eval_bilinear(h.mul(), eval_bilinear(h.mul(), e3, e4), apply(h.twist(), e4)) == Vector{0, 0, Scalar(-1, 4), 0, 0});
  CHECK(eval_bilinear(h.mul(), apply(h.twist(), e3), eval_bilinear(h.mul(), e4, e4)).is_zero());
  CHECK(hom_associator(h, e3, e4, e4) == Vector{0, 0, Scalar(-1, 4), 0, 0});
  CHECK(eval_trilinear(hom_associator_tensor(h), e3, e4, e4) == Vector{0, 0, Scalar(-1, 4), 0, 0});

  const CheckReport ha = is_hom_associative(h);
  CHECK_FALSE(ha.holds);
  CHECK(ha.witness->indices == idx({0, 0, 1}));
  CHECK(ha.witness->rhs == Vector{0, Scalar(-1, 4), 0, 0, 0});
  const auto at_344 = witness_at(hom_associativity_identity(h), 5, idx({2, 3, 3}));
  REQUIRE(at_344);
  CHECK(at_344->lhs == Vector{0, 0, Scalar(-1, 4), 0, 0});
  CHECK(at_344->rhs.is_zero());

  // The Hom-associator is not skew under x <-> z at (e1, e1, e4).
  const CheckReport flex = is_hom_flexible(h);
  CHECK_FALSE(flex.holds);
  CHECK(flex.witness->indices == idx({0, 0, 3}));
  CHECK(flex.witness->lhs == Vector{0, 0, 0, Scalar(1, 4), Scalar(-1, 2)});
  CHECK(flex.witness->rhs == Vector{0, 0, 0, Scalar(1, 4), Scalar(1, 2)});

  CHECK_FALSE(is_hom_alternative(h).holds);
  CHECK(is_hom_alternative(h).part(Property::left_alternative)->witness->indices == idx({0, 0, 1}));

  const CheckReport as = is_associative(h);
  CHECK_FALSE(as.holds);
  CHECK(as.witness->indices == idx({0, 0, 1}));
  CHECK(as.witness->rhs == Vector{Scalar(1, 4), 0, 0, 0, 0});

  const auto n = nucleus_basis(h.mul());
  REQUIRE(n.size() == 1);
  CHECK(n[0] == Vector{0, 0, 0, 0, 1});
  CHECK_THROWS_AS(untwist(h), NotInvertible);
  CHECK(check_hom_algebra_morphism(h.twist(), h, h).holds);
}

TEST_CASE("hom_associator tensor agrees with direct evaluation") {
  const HomAlgebra h = build_myung5();
  const TrilinearMap t = hom_associator_tensor(h);
  Rng rng(8);
  for (int i = 0; i < 50; ++i) {
    const Vector x = rng.vector(5, 9), y = rng.vector(5, 9), z = rng.vector(5, 9);
    CHECK(eval_trilinear(t, x, y, z) == hom_associator(h, x, y, z));
  }
}

TEST_CASE("trivial algebras") {
  const HomAlgebra zero(BilinearMap(2), LinearMap::identity(2));
  CHECK(is_hom_associative(zero).holds);
  CHECK(is_hom_flexible(zero).holds);
  CHECK(is_hom_alternative(zero).holds);
  CHECK(hom_associator_tensor(zero).is_zero());

  BilinearMap unit(1);
  unit.set(0, 0, 0, 1);
  const HomAlgebra one(unit, LinearMap::identity(1));
  CHECK(is_associative(one).holds);
  CHECK(is_multiplicative(one).holds);
  CHECK(default_basis_names(2) == std::vector<std::string>{"e0", "e1"});
  CHECK_THROWS_AS(HomAlgebra(BilinearMap(2), LinearMap::identity(3)), DimensionMismatch);
}

TEST_CASE("yau twist, untwist and the twisted associator") {
  const HomAlgebra s = build_sl2();
  const HomAlgebra t = yau_twist(s.mul(), s.twist());
  const Vector u = e(3, 0), v = e(3, 1), w = e(3, 2);
  CHECK(eval_bilinear(t.mul(), u, v) == -2 * w);
  CHECK(is_multiplicative(t).holds);
  CHECK(untwist(t) == s.mul());
  CHECK(yau_twist(untwist(t), t.twist()).mul() == t.mul());
  CHECK(check_twisted_associator(s.mul(), s.twist()).holds);
  CHECK(yau_twist(s.mul(), LinearMap::identity(3)).mul() == s.mul());
  CHECK(untwist(HomAlgebra(s.mul(), LinearMap::identity(3))) == s.mul());

  // u -> u, v -> u, w -> 0 is not an endomorphism of sl2.
  const Vector imgs[] = {u, u, Vector(3)};
  const LinearMap bad = LinearMap::from_images(imgs);
  try {
    yau_twist(s.mul(), bad);
    FAIL("expected NotMorphism");
  } catch (const NotMorphism& ex) {
    REQUIRE(ex.report().witness);
    CHECK(ex.report().witness->indices == idx({0, 1}));
  }
  const CheckReport m = check_hom_algebra_morphism(bad, s, s);
  CHECK_FALSE(m.holds);
  CHECK(m.witness);
  CHECK(check_hom_algebra_morphism(LinearMap::identity(3), s, s).holds);
}

TEST_CASE("nucleus and inner twist on 2x2 matrices") {
  const UnitalAlgebra m = build_mat2();
  CHECK(nucleus_basis(m.mul).size() == 4);

  const HomAlgebra same = inner_twist(m.mul, m.one, m.one);
  CHECK(same.twist().is_identity());
  CHECK(same.mul() == m.mul);

  const Vector u{1, 0, 0, 2};
  const HomAlgebra h = inner_twist(m.mul, m.one, u, m.basis_names);
  CHECK(is_multiplicative(h).holds);
  CHECK(is_hom_associative(h).holds);
  // conjugation by diag(1, 2) scales E12 by 1/2 and E21 by 2
  CHECK(apply(h.twist(), e(4, 1)) == Vector{0, Scalar(1, 2), 0, 0});
  CHECK(apply(h.twist(), e(4, 2)) == Vector{0, 0, 2, 0});

  CHECK_THROWS_AS(inner_twist(m.mul, m.one, Vector{1, 0, 0, 0}), NotInvertibleElement);
  CHECK_THROWS_AS(inner_twist(m.mul, Vector{1, 0, 0, 0}, u), NoUnit);

  // octonions: e1 is invertible but not nuclear
  CHECK_THROWS_AS(inner_twist(build_octonions(), e(8, 0), e(8, 1)), NotInNucleus);
}
