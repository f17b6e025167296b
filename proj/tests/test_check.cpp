#include <catch_amalgamated.hpp>

#include "homakivis/check.hpp"

using namespace homakivis;

namespace {

// mu(x, y) = 0 except mu(e1, e0) = e0: fails first at (1, 0).
BilinearMap one_entry() {
  BilinearMap b(2);
  b.set(1, 0, 0, 1);
  return b;
}

Identity vanishes(const BilinearMap& b) {
  return {Property::associative, 2, [b](std::span<const Vector> a) {
            return std::pair{eval_bilinear(b, a[0], a[1]), Vector(b.dim())};
          }};
}

// x -> b(x, x), quadratic.
Identity square_vanishes(const BilinearMap& b) {
  return {Property::quadratic, 1, [b](std::span<const Vector> a) {
            return std::pair{eval_bilinear(b, a[0], a[0]), Vector(b.dim())};
          }};
}

}  // namespace

TEST_CASE("basis sweep reports the first lexicographic failure") {
  const CheckReport r = sweep_basis(vanishes(one_entry()), 2);
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness);
  CHECK(r.witness->indices == std::vector<std::size_t>{1, 0});
  CHECK(r.witness->lhs == Vector{1, 0});
  CHECK(r.witness->rhs == Vector{0, 0});
  CHECK(r.property == Property::associative);
  CHECK(sweep_basis(vanishes(BilinearMap(3)), 3).holds);
  CHECK_FALSE(sweep_basis(vanishes(BilinearMap(3)), 3).witness);
}

TEST_CASE("witnesses replay") {
  const Identity id = vanishes(one_entry());
  const CheckReport r = sweep_basis(id, 2);
  auto replay = witness_at(id, 2, r.witness->indices);
  REQUIRE(replay);
  CHECK(replay->lhs == r.witness->lhs);
  CHECK(replay->rhs == r.witness->rhs);
  const std::size_t ok[] = {0, 0};
  CHECK_FALSE(witness_at(id, 2, ok));
}

TEST_CASE("polarization catches what basis vectors miss") {
  // b skew except for the symmetric part in (0, 1): b(e_i, e_i) = 0 for
  // every i, but b(e0 + e1, e0 + e1) != 0.
  BilinearMap b(2);
  b.set(0, 1, 0, 1);
  b.set(1, 0, 0, 1);
  const Identity q = square_vanishes(b);
  CHECK(sweep_basis(q, 2).holds);
  const CheckReport p = sweep_basis(polarize_first(q), 2);
  CHECK_FALSE(p.holds);
  CHECK(p.property == Property::polarized);
  CHECK(p.witness->indices == std::vector<std::size_t>{0, 1});
  CHECK_FALSE(sweep_samples(q, 2, 50).holds);

  BilinearMap skew(2);
  skew.set(0, 1, 0, 1);
  skew.set(1, 0, 0, -1);
  CHECK(sweep_basis(polarize_first(square_vanishes(skew)), 2).holds);
  CHECK(sweep_samples(square_vanishes(skew), 2, 50).holds);
}

TEST_CASE("random samples are seeded") {
  const Identity id = vanishes(one_entry());
  const CheckReport a = sweep_samples(id, 2, 10, 99);
  const CheckReport b = sweep_samples(id, 2, 10, 99);
  REQUIRE(a.witness);
  CHECK(a.witness->arguments == b.witness->arguments);
  CHECK(a.witness->indices.empty());
  CHECK(a.property == Property::random_samples);
}

TEST_CASE("all_of takes the first failing witness") {
  CheckReport ok(Property::left_alternative);
  CheckReport bad = sweep_basis(vanishes(one_entry()), 2, Property::right_alternative);
  const CheckReport r = all_of(Property::hom_alternative, {ok, bad});
  CHECK_FALSE(r.holds);
  CHECK(r.witness->indices == bad.witness->indices);
  REQUIRE(r.part(Property::right_alternative));
  CHECK(r.part(Property::left_alternative)->holds);
  CHECK(r.part(Property::malcev) == nullptr);
  CHECK(all_of(Property::hom_alternative, {ok, ok}).holds);
}

TEST_CASE("property names are snake case") {
  CHECK(property_name(Property::hom_associative) == "hom_associative");
  CHECK(property_name(Property::six_times_cyclic_ternary) == "six_times_cyclic_ternary");
  CHECK(property_name(Property::finite_order) == "finite_order");
}
