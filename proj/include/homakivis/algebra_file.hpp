#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "homakivis/hom_akivis.hpp"
#include "homakivis/hom_algebra.hpp"
#include "homakivis/linear.hpp"

namespace homakivis {

enum class FileKind { algebra, akivis };

std::string_view kind_name(FileKind k);

/// In-memory form of the JSON algebra format:
///
///   {"kind": "algebra" | "akivis", "dimension": n, "basis": [names],
///    "bilinear": [{"i", "j", "k", "c"}], "ternary": [{"i", "j", "k", "l", "c"}],
///    "twist": [n*n rational strings, row-major]}
///
/// Indices are 0-based, "c" is "p", "-p" or "p/q". Omitted entries are
/// zero, an omitted twist is the identity, an omitted kind is "algebra",
/// omitted basis names are e0, e1, ...
struct AlgebraFile {
  FileKind kind = FileKind::algebra;
  std::vector<std::string> basis;
  BilinearMap bilinear;
  TrilinearMap ternary;  // all zero for kind algebra
  LinearMap twist;

  std::size_t dim() const noexcept { return bilinear.dim(); }
};

/// Throws InputError naming the offending field (or line, for JSON syntax
/// errors): unknown keys, bad rationals, out-of-range or duplicate indices,
/// a ternary in an algebra file, dimension mismatches.
AlgebraFile parse_algebra_file(std::string_view text);
AlgebraFile read_algebra_file(const std::filesystem::path& path);

/// Canonical text: fixed key order, nonzero entries only in index order,
/// twist always written, two-space indentation, trailing newline.
/// export(parse(export(f))) == export(f).
std::string export_algebra_file(const AlgebraFile& file);

AlgebraFile to_file(const HomAlgebra& h);
AlgebraFile to_file(const HomAkivisAlgebra& k);
/// Throws InputError if the file kind does not match.
HomAlgebra to_hom_algebra(const AlgebraFile& file);
/// Throws InputError on kind mismatch, SkewSymmetryViolation on a
/// non-skew bracket.
HomAkivisAlgebra to_hom_akivis(const AlgebraFile& file);

/// A linear map file: {"dimension": n, "matrix": [n*n, row-major]}, or any
/// algebra file, whose twist is taken.
LinearMap parse_map_file(std::string_view text);
LinearMap read_map_file(const std::filesystem::path& path);
std::string export_map_file(const LinearMap& map);

std::string read_text(const std::filesystem::path& path);

}  // namespace homakivis
