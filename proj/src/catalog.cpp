#include "homakivis/catalog.hpp"

#include <array>
#include <string>
#include <tuple>

#include "homakivis/errors.hpp"

namespace homakivis {

namespace {

struct Entry {
  std::size_t i;
  std::size_t j;
  std::size_t k;
  Scalar c;
};

BilinearMap table(std::size_t dim, std::initializer_list<Entry> entries) {
  BilinearMap b(dim);
  for (const auto& e : entries) b.set(e.i, e.j, e.k, b.at(e.i, e.j, e.k) + e.c);
  return b;
}

LinearMap images(std::size_t dim, std::initializer_list<std::tuple<std::size_t, std::size_t, Scalar>> entries) {
  Matrix m(dim, dim);
  for (const auto& [from, to, c] : entries) m(to, from) = c;
  return LinearMap(std::move(m));
}

const Scalar kHalf(1, 2);

}  // namespace

HomAlgebra build_three_dim_family(const Scalar& a, const Scalar& b) {
  if (is_zero(a) || is_zero(b)) throw ZeroParameter("parameters a and b must be nonzero");
  enum { u, v, w };
  BilinearMap mul = table(3, {
                                 {u, u, u, a},
                                 {v, v, v, a},
                                 {u, v, v, a},
                                 {v, u, v, a},
                                 {v, w, w, b},
                                 {u, w, w, b},
                                 {w, u, w, b},
                             });
  LinearMap alpha = images(3, {{u, v, a}, {v, w, a}, {w, u, b}});
  return HomAlgebra(std::move(mul), std::move(alpha), {"u", "v", "w"});
}

HomAlgebra build_sl2() {
  enum { u, v, w };
  BilinearMap bracket = table(3, {
                                     {u, v, u, -2},
                                     {v, u, u, 2},
                                     {u, w, v, 1},
                                     {w, u, v, -1},
                                     {v, w, w, -2},
                                     {w, v, w, 2},
                                 });
  LinearMap alpha = images(3, {{u, w, 1}, {v, v, -1}, {w, u, 1}});
  return HomAlgebra(std::move(bracket), std::move(alpha), {"u", "v", "w"});
}

LinearMap myung5_twist() { return images(5, {{0, 1, 1}, {1, 0, 1}, {3, 3, -1}, {4, 4, 1}}); }

namespace {

std::vector<std::string> e_names(std::size_t n, std::size_t first) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(first + i));
  return names;
}

}  // namespace

HomAlgebra build_myung5() {
  BilinearMap mul = table(5, {
                                 {0, 1, 4, 1},
                                 {0, 1, 3, kHalf},
                                 {1, 0, 4, 1},
                                 {1, 0, 3, -kHalf},
                                 {0, 3, 0, kHalf},
                                 {3, 0, 0, -kHalf},
                                 {1, 3, 1, -kHalf},
                                 {3, 1, 1, kHalf},
                                 {2, 3, 2, kHalf},
                                 {3, 2, 2, -kHalf},
                                 {3, 3, 4, -1},
                             });
  return HomAlgebra(std::move(mul), myung5_twist(), e_names(5, 1));
}

HomBracketAlgebra build_kuzmin5() {
  BilinearMap bracket = table(5, {
                                     {0, 1, 3, 1},
                                     {1, 0, 3, -1},
                                     {0, 3, 0, 1},
                                     {3, 0, 0, -1},
                                     {1, 3, 1, -1},
                                     {3, 1, 1, 1},
                                     {2, 3, 2, 1},
                                     {3, 2, 2, -1},
                                 });
  return HomBracketAlgebra(std::move(bracket), myung5_twist(), e_names(5, 1));
}

HomAlgebra build_kuzmin5_hom_algebra() {
  HomBracketAlgebra k = build_kuzmin5();
  return HomAlgebra(k.bracket(), k.twist(), k.basis_names());
}

UnitalAlgebra build_mat2() {
  // E_ab E_cd = [b == c] E_ad, index 2a + b
  BilinearMap mul(4);
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      for (std::size_t d = 0; d < 2; ++d) mul.set(2 * a + b, 2 * b + d, 2 * a + d, 1);
    }
  }
  return {std::move(mul), Vector{1, 0, 0, 1}, {"E11", "E12", "E21", "E22"}};
}

BilinearMap build_octonions() {
  constexpr std::array<std::array<std::size_t, 3>, 7> lines{{
      {1, 2, 4},
      {2, 3, 5},
      {3, 4, 6},
      {4, 5, 7},
      {5, 6, 1},
      {6, 7, 2},
      {7, 1, 3},
  }};
  BilinearMap mul(8);
  for (std::size_t i = 0; i < 8; ++i) {
    mul.set(0, i, i, 1);
    mul.set(i, 0, i, 1);
  }
  for (std::size_t i = 1; i < 8; ++i) mul.set(i, i, 0, -1);
  for (const auto& l : lines) {
    for (std::size_t r = 0; r < 3; ++r) {
      const std::size_t a = l[r];
      const std::size_t b = l[(r + 1) % 3];
      const std::size_t c = l[(r + 2) % 3];
      mul.set(a, b, c, 1);
      mul.set(b, a, c, -1);
    }
  }
  return mul;
}

LinearMap octonion_rotation() {
  Matrix m(8, 8);
  m(0, 0) = 1;
  m(7, 7) = 1;
  for (std::size_t i = 1; i < 7; ++i) m((2 * i) % 7, i) = 1;
  return LinearMap(std::move(m));
}

HomAlgebra build_octonions_twisted() {
  return yau_twist(build_octonions(), octonion_rotation(), e_names(8, 0));
}

namespace {

std::vector<CatalogEntry> make_catalog() {
  std::vector<CatalogEntry> entries;
  entries.push_back({
      "three-dim-family",
      {"example-3.2"},
      "three-dimensional family with parameters a, b",
      {{"a", Scalar(1)}, {"b", Scalar(2)}},
      [](const CatalogParams& p) { return build_three_dim_family(p.at("a"), p.at("b")); },
      {
          {"hom_associative", false, "stated"},
          {"associative", false, "stated"},
          {"multiplicative", false, "derived"},
          {"associated_hom_akivis", true, "derived"},
      },
  });
  entries.push_back({
      "sl2",
      {"example-3.3"},
      "sl(2) with the swap-and-negate twist",
      {},
      [](const CatalogParams&) { return build_sl2(); },
      {
          {"multiplicative", true, "stated"},
          {"hom_associative", false, "stated"},
          {"jacobi", true, "derived"},
          {"hom_jacobi", true, "derived"},
          {"malcev", true, "derived"},
      },
  });
  entries.push_back({
      "myung5",
      {"example-3.4"},
      "five-dimensional flexible algebra with a singular twist",
      {},
      [](const CatalogParams&) { return build_myung5(); },
      {
          {"multiplicative", true, "stated"},
          {"hom_associative", false, "stated"},
          {"hom_flexible", true, "stated"},
          {"associated_hom_akivis", true, "stated"},
          {"hom_alternative", false, "derived"},
      },
  });
  entries.push_back({
      "kuzmin5",
      {"example-3.5"},
      "commutator algebra of myung5, same twist",
      {},
      [](const CatalogParams&) { return build_kuzmin5_hom_algebra(); },
      {
          {"multiplicative", true, "stated"},
          {"hom_associative", false, "stated"},
          {"malcev", true, "stated"},
          {"hom_malcev", true, "stated"},
      },
  });
  entries.push_back({
      "mat2",
      {},
      "2x2 rational matrices, identity twist",
      {},
      [](const CatalogParams&) {
        UnitalAlgebra m = build_mat2();
        return HomAlgebra(m.mul, LinearMap::identity(4), m.basis_names);
      },
      {
          {"associative", true, "derived"},
          {"hom_associative", true, "derived"},
      },
  });
  entries.push_back({
      "octonions",
      {},
      "octonions, identity twist",
      {},
      [](const CatalogParams&) { return HomAlgebra(build_octonions(), LinearMap::identity(8), e_names(8, 0)); },
      {
          {"associative", false, "derived"},
          {"hom_alternative", true, "derived"},
          {"malcev_pipeline", true, "derived"},
      },
  });
  entries.push_back({
      "octonions-twisted",
      {},
      "octonions Yau-twisted by an order-3 automorphism",
      {},
      [](const CatalogParams&) { return build_octonions_twisted(); },
      {
          {"multiplicative", true, "derived"},
          {"hom_alternative", true, "derived"},
          {"hom_associative", false, "derived"},
          {"malcev_pipeline", true, "derived"},
      },
  });
  return entries;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = make_catalog();
  return entries;
}

const CatalogEntry* find_catalog_entry(const std::string& name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return &e;
    for (const auto& alias : e.aliases) {
      if (alias == name) return &e;
    }
  }
  return nullptr;
}

HomAlgebra build_entry(const CatalogEntry& entry, const CatalogParams& params) {
  CatalogParams merged = entry.defaults;
  for (const auto& [key, value] : params) {
    auto it = merged.find(key);
    if (it == merged.end()) throw InputError("param." + key, "not a parameter of " + entry.name);
    it->second = value;
  }
  return entry.build(merged);
}

}  // namespace homakivis
