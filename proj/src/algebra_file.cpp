#include "homakivis/algebra_file.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "homakivis/errors.hpp"

namespace homakivis {

using Json = nlohmann::ordered_json;

namespace {

std::string line_of(std::string_view text, std::size_t byte) {
  const std::size_t end = std::min(byte, text.size());
  return "line " + std::to_string(1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(end), '\n'));
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(line_of(text, e.byte > 0 ? e.byte - 1 : 0), "invalid JSON");
  }
}

Scalar scalar_at(const Json& v, const std::string& field) {
  if (v.is_string()) {
    try {
      return parse_scalar(v.get<std::string>());
    } catch (const InputError& e) {
      throw InputError(field, e.message());
    }
  }
  if (v.is_number_integer()) return parse_scalar(v.dump());
  throw InputError(field, "expected a rational string such as \"-3/4\"");
}

std::size_t index_at(const Json& v, const std::string& field, std::size_t dim) {
  if (!v.is_number_integer()) throw InputError(field, "expected an integer index");
  const auto i = v.get<std::int64_t>();
  if (i < 0 || static_cast<std::size_t>(i) >= dim) {
    throw InputError(field, "index " + std::to_string(i) + " out of range [0, " + std::to_string(dim) + ")");
  }
  return static_cast<std::size_t>(i);
}

const Json& member(const Json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(where, std::string("missing \"") + key + "\"");
  return *it;
}

void reject_unknown_keys(const Json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return it.key() == a; })) {
      throw InputError(where.empty() ? it.key() : where + "." + it.key(), "unknown key");
    }
  }
}

const Json& array_member(const Json& obj, const char* key) {
  const Json& a = member(obj, key, "");
  if (!a.is_array()) throw InputError(key, "expected an array");
  return a;
}

std::size_t dimension_of(const Json& doc) {
  const Json& d = member(doc, "dimension", "");
  if (!d.is_number_integer() || d.get<std::int64_t>() <= 0) throw InputError("dimension", "expected a positive integer");
  return static_cast<std::size_t>(d.get<std::int64_t>());
}

LinearMap matrix_at(const Json& a, const std::string& field, std::size_t dim) {
  if (!a.is_array() || a.size() != dim * dim) {
    throw InputError(field, "expected an array of " + std::to_string(dim * dim) + " rationals (row-major)");
  }
  Matrix m(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      m(r, c) = scalar_at(a[r * dim + c], field + "[" + std::to_string(r * dim + c) + "]");
    }
  }
  return LinearMap(std::move(m));
}

Json matrix_json(const LinearMap& map) {
  Json a = Json::array();
  for (std::size_t r = 0; r < map.dim(); ++r) {
    for (std::size_t c = 0; c < map.dim(); ++c) a.push_back(to_string(map.at(r, c)));
  }
  return a;
}

}  // namespace

std::string_view kind_name(FileKind k) { return k == FileKind::akivis ? "akivis" : "algebra"; }

AlgebraFile parse_algebra_file(std::string_view text) {
  const Json doc = parse_json(text);
  if (!doc.is_object()) throw InputError("", "expected a JSON object");
  reject_unknown_keys(doc, {"kind", "dimension", "basis", "bilinear", "ternary", "twist"}, "");

  AlgebraFile file;
  if (auto it = doc.find("kind"); it != doc.end()) {
    if (*it == "algebra") {
      file.kind = FileKind::algebra;
    } else if (*it == "akivis") {
      file.kind = FileKind::akivis;
    } else {
      throw InputError("kind", "expected \"algebra\" or \"akivis\"");
    }
  }
  const std::size_t n = dimension_of(doc);

  if (auto it = doc.find("basis"); it != doc.end()) {
    if (!it->is_array() || it->size() != n) {
      throw InputError("basis", "expected an array of " + std::to_string(n) + " names");
    }
    std::set<std::string> seen;
    for (std::size_t i = 0; i < n; ++i) {
      const std::string field = "basis[" + std::to_string(i) + "]";
      if (!(*it)[i].is_string()) throw InputError(field, "expected a string");
      if (!seen.insert((*it)[i].get<std::string>()).second) throw InputError(field, "duplicate basis name");
      file.basis.push_back((*it)[i].get<std::string>());
    }
  } else {
    file.basis = default_basis_names(n);
  }

  file.bilinear = BilinearMap(n);
  if (doc.contains("bilinear")) {
    const Json& entries = array_member(doc, "bilinear");
    std::set<std::array<std::size_t, 3>> seen;
    for (std::size_t e = 0; e < entries.size(); ++e) {
      const std::string where = "bilinear[" + std::to_string(e) + "]";
      const Json& entry = entries[e];
      if (!entry.is_object()) throw InputError(where, "expected an object");
      reject_unknown_keys(entry, {"i", "j", "k", "c"}, where);
      const std::size_t i = index_at(member(entry, "i", where), where + ".i", n);
      const std::size_t j = index_at(member(entry, "j", where), where + ".j", n);
      const std::size_t k = index_at(member(entry, "k", where), where + ".k", n);
      if (!seen.insert({i, j, k}).second) throw InputError(where, "duplicate entry for (i, j, k)");
      file.bilinear.set(i, j, k, scalar_at(member(entry, "c", where), where + ".c"));
    }
  }

  file.ternary = TrilinearMap(n);
  if (doc.contains("ternary")) {
    if (file.kind != FileKind::akivis) throw InputError("ternary", "only allowed when kind is \"akivis\"");
    const Json& entries = array_member(doc, "ternary");
    std::set<std::array<std::size_t, 4>> seen;
    for (std::size_t e = 0; e < entries.size(); ++e) {
      const std::string where = "ternary[" + std::to_string(e) + "]";
      const Json& entry = entries[e];
      if (!entry.is_object()) throw InputError(where, "expected an object");
      reject_unknown_keys(entry, {"i", "j", "k", "l", "c"}, where);
      const std::size_t i = index_at(member(entry, "i", where), where + ".i", n);
      const std::size_t j = index_at(member(entry, "j", where), where + ".j", n);
      const std::size_t k = index_at(member(entry, "k", where), where + ".k", n);
      const std::size_t l = index_at(member(entry, "l", where), where + ".l", n);
      if (!seen.insert({i, j, k, l}).second) throw InputError(where, "duplicate entry for (i, j, k, l)");
      file.ternary.set(i, j, k, l, scalar_at(member(entry, "c", where), where + ".c"));
    }
  }

  if (auto it = doc.find("twist"); it != doc.end()) {
    file.twist = matrix_at(*it, "twist", n);
  } else {
    file.twist = LinearMap::identity(n);
  }
  return file;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path.string(), "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

AlgebraFile read_algebra_file(const std::filesystem::path& path) {
  const std::string text = read_text(path);
  try {
    return parse_algebra_file(text);
  } catch (const InputError& e) {
    throw InputError(path.string() + (e.field().empty() ? "" : ": " + e.field()), e.message());
  }
}

std::string export_algebra_file(const AlgebraFile& file) {
  const std::size_t n = file.dim();
  Json doc;
  doc["kind"] = kind_name(file.kind);
  doc["dimension"] = n;
  doc["basis"] = file.basis;
  Json bilinear = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& c = file.bilinear.at(i, j, k);
        if (!is_zero(c)) bilinear.push_back(Json{{"i", i}, {"j", j}, {"k", k}, {"c", to_string(c)}});
      }
    }
  }
  doc["bilinear"] = std::move(bilinear);
  if (file.kind == FileKind::akivis) {
    Json ternary = Json::array();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          for (std::size_t l = 0; l < n; ++l) {
            const Scalar& c = file.ternary.at(i, j, k, l);
            if (!is_zero(c)) {
              ternary.push_back(Json{{"i", i}, {"j", j}, {"k", k}, {"l", l}, {"c", to_string(c)}});
            }
          }
        }
      }
    }
    doc["ternary"] = std::move(ternary);
  }
  doc["twist"] = matrix_json(file.twist);
  return doc.dump(2) + "\n";
}

AlgebraFile to_file(const HomAlgebra& h) {
  return AlgebraFile{FileKind::algebra, h.basis_names(), h.mul(), TrilinearMap(h.dim()), h.twist()};
}

AlgebraFile to_file(const HomAkivisAlgebra& k) {
  return AlgebraFile{FileKind::akivis, k.basis_names(), k.bracket(), k.ternary(), k.twist()};
}

HomAlgebra to_hom_algebra(const AlgebraFile& file) {
  if (file.kind != FileKind::algebra) throw InputError("kind", "expected a binary algebra file (kind \"algebra\")");
  return HomAlgebra(file.bilinear, file.twist, file.basis);
}

HomAkivisAlgebra to_hom_akivis(const AlgebraFile& file) {
  if (file.kind != FileKind::akivis) throw InputError("kind", "expected a Hom-Akivis file (kind \"akivis\")");
  return HomAkivisAlgebra(file.bilinear, file.ternary, file.twist, file.basis);
}

LinearMap parse_map_file(std::string_view text) {
  const Json doc = parse_json(text);
  if (!doc.is_object()) throw InputError("", "expected a JSON object");
  if (doc.contains("matrix")) {
    reject_unknown_keys(doc, {"dimension", "matrix"}, "");
    return matrix_at(doc["matrix"], "matrix", dimension_of(doc));
  }
  if (doc.contains("twist")) return parse_algebra_file(text).twist;
  throw InputError("matrix", "missing \"matrix\" (or an algebra file with \"twist\")");
}

LinearMap read_map_file(const std::filesystem::path& path) { return parse_map_file(read_text(path)); }

std::string export_map_file(const LinearMap& map) {
  Json doc;
  doc["dimension"] = map.dim();
  doc["matrix"] = matrix_json(map);
  return doc.dump(2) + "\n";
}

}  // namespace homakivis
