#include <catch_amalgamated.hpp>

#include "homakivis/catalog.hpp"
#include "homakivis/errors.hpp"
#include "homakivis/genesis.hpp"
#include "homakivis/linear.hpp"
#include "homakivis/random.hpp"

using namespace homakivis;

namespace {

// Plain double/triple sums, no zero skipping.
Vector expand2(const BilinearMap& b, const Vector& x, const Vector& y) {
  const std::size_t n = b.dim();
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out[k] += x[i] * y[j] * b.at(i, j, k);
  return out;
}

Vector expand3(const TrilinearMap& t, const Vector& x, const Vector& y, const Vector& z) {
  const std::size_t n = t.dim();
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) out[l] += x[i] * y[j] * z[k] * t.at(i, j, k, l);
  return out;
}

TrilinearMap random_trilinear(std::size_t n, Rng& rng) {
  TrilinearMap t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) t.set(i, j, k, l, rng.rational(3));
  return t;
}

LinearMap random_map(std::size_t n, Rng& rng) {
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = rng.rational(4);
  return LinearMap(std::move(m));
}

}  // namespace

TEST_CASE("scalars parse to canonical form") {
  CHECK(to_string(parse_scalar("6/4")) == "3/2");
  CHECK(to_string(parse_scalar("-0/5")) == "0");
  CHECK(to_string(parse_scalar("-12")) == "-12");
  CHECK(to_string(parse_scalar("4/2")) == "2");
  CHECK(parse_scalar("123456789012345678901234567890/3") == Scalar("41152263004115226300411522630"));
  for (const char* bad : {"", "1/0", "1.5", "+3", "a", "1/-2", "--1", "3/", "/3"}) {
    CHECK_THROWS_AS(parse_scalar(bad), InputError);
  }
}

TEST_CASE("scalar arithmetic stays reduced") {
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const Scalar a = rng.rational(50);
    const Scalar b = rng.rational(50);
    const Scalar s = a + b;
    CHECK(mpz_class(gcd(s.get_num(), s.get_den())) == 1);
    CHECK(s.get_den() > 0);
    CHECK(a + (-a) == 0);
    if (!is_zero(a)) CHECK(a * (1 / a) == 1);
  }
}

TEST_CASE("eval_bilinear at a table entry") {
  const HomAlgebra m = build_myung5();
  CHECK(eval_bilinear(m.mul(), Vector::basis(5, 0), Vector::basis(5, 1)) == Vector{0, 0, 0, Scalar(1, 2), 1});
  CHECK(eval_bilinear(m.mul(), Vector(5), Vector{1, 2, 3, 4, 5}).is_zero());
}

TEST_CASE("eval_bilinear and eval_trilinear match explicit expansion") {
  Rng rng(11);
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = 2 + round % 5;
    GenConfig cfg{n, static_cast<std::uint64_t>(round), 4, 1};
    const BilinearMap b = random_bilinear(cfg);
    const Vector x = rng.vector(n, 5);
    const Vector y = rng.vector(n, 5);
    const Scalar lambda = rng.rational(7);
    CHECK(eval_bilinear(b, x, y) == expand2(b, x, y));
    CHECK(eval_bilinear(b, lambda * x, y) == lambda * eval_bilinear(b, x, y));
    if (n <= 4) {
      const TrilinearMap t = random_trilinear(n, rng);
      const Vector z = rng.vector(n, 5);
      CHECK(eval_trilinear(t, x, y, z) == expand3(t, x, y, z));
      CHECK(eval_trilinear(t, x, lambda * y, z) == lambda * eval_trilinear(t, x, y, z));
    }
  }
  CHECK(eval_trilinear(TrilinearMap(3), Vector{1, 2, 3}, Vector{4, 5, 6}, Vector{7, 8, 9}).is_zero());
}

TEST_CASE("dimension mismatches are rejected") {
  CHECK_THROWS_AS(eval_bilinear(BilinearMap(3), Vector(2), Vector(3)), DimensionMismatch);
  CHECK_THROWS_AS(compose(LinearMap::identity(2), LinearMap::identity(3)), DimensionMismatch);
  CHECK_THROWS_AS(LinearMap(Matrix(2, 3)), DimensionMismatch);
  CHECK_THROWS_AS(Vector(2) + Vector(3), DimensionMismatch);
}

TEST_CASE("compose and apply agree") {
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 2 + i % 4;
    const LinearMap a = random_map(n, rng);
    const LinearMap b = random_map(n, rng);
    const Vector x = rng.vector(n, 9);
    CHECK(apply(compose(a, b), x) == apply(a, apply(b, x)));
    CHECK(compose(LinearMap::identity(n), a) == a);
  }
}

TEST_CASE("sl2 twist is an involution") {
  const LinearMap alpha = build_sl2().twist();
  CHECK(compose(alpha, alpha).is_identity());
  CHECK(invert(alpha) == alpha);
  CHECK(invert(LinearMap::identity(4)).is_identity());
}

TEST_CASE("invert is exact or reports singularity") {
  CHECK_THROWS_AS(invert(myung5_twist()), NotInvertible);
  Rng rng(17);
  int inverted = 0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 2 + i % 5;
    const LinearMap a = random_map(n, rng);
    try {
      const LinearMap inv = invert(a);
      CHECK(compose(a, inv).is_identity());
      CHECK(compose(inv, a).is_identity());
      ++inverted;
    } catch (const NotInvertible&) {
    }
  }
  CHECK(inverted > 50);
}

TEST_CASE("null space and unique solutions") {
  Matrix m(2, 3);
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(0, 2) = 3;
  m(1, 0) = 2;
  m(1, 1) = 4;
  m(1, 2) = 6;
  const auto ns = null_space(m);
  REQUIRE(ns.size() == 2);
  CHECK(ns[0] == Vector{-2, 1, 0});
  CHECK(ns[1] == Vector{-3, 0, 1});

  Matrix sq(2, 2);
  sq(0, 0) = 2;
  sq(0, 1) = 1;
  sq(1, 0) = 1;
  sq(1, 1) = 1;
  CHECK(solve_unique(sq, Vector{3, 2}) == Vector{1, 1});
  CHECK_FALSE(solve_unique(m, Vector{1, 2}).has_value());
  CHECK_FALSE(solve_unique(m, Vector{1, 3}).has_value());
}

TEST_CASE("basis vectors and power") {
  CHECK(Vector::basis(3, 1) == Vector{0, 1, 0});
  const LinearMap rot = octonion_rotation();
  CHECK(power(rot, 3).is_identity());
  CHECK_FALSE(power(rot, 1).is_identity());
  CHECK(power(rot, 0).is_identity());
}
