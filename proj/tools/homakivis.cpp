#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "homakivis/algebra_file.hpp"
#include "homakivis/catalog.hpp"
#include "homakivis/classify.hpp"
#include "homakivis/errors.hpp"
#include "homakivis/genesis.hpp"
#include "homakivis/hom_akivis.hpp"
#include "homakivis/hom_algebra.hpp"
#include "homakivis/report.hpp"

namespace hk = homakivis;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

void write_output(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw hk::InputError(out, "cannot open for writing");
  f << text;
}

int classify_cmd(const std::string& path, const std::string& out) {
  const std::string text = hk::read_text(path);
  const hk::AlgebraFile file = hk::parse_algebra_file(text);
  const hk::Classification c = file.kind == hk::FileKind::algebra ? hk::classify(hk::to_hom_algebra(file))
                                                                  : hk::classify(hk::to_hom_akivis(file));
  write_output(out, hk::dump(hk::report_json(c, file.basis, text)));
  return kOk;
}

int derive_cmd(const std::string& path, const std::string& out) {
  const hk::AlgebraFile file = hk::read_algebra_file(path);
  const hk::HomAkivisAlgebra k = hk::associated_hom_akivis(hk::to_hom_algebra(file));
  write_output(out, hk::export_algebra_file(hk::to_file(k)));
  return kOk;
}

int twist_cmd(const std::string& path, const std::string& map_path, const std::string& mode, const std::string& out) {
  const hk::AlgebraFile file = hk::read_algebra_file(path);
  const hk::LinearMap map = hk::read_map_file(map_path);
  if (map.dim() != file.dim()) {
    throw hk::InputError(map_path, "map dimension " + std::to_string(map.dim()) + " does not match algebra dimension " +
                                       std::to_string(file.dim()));
  }
  if (mode == "yau") {
    const hk::HomAlgebra h = hk::to_hom_algebra(file);
    write_output(out, hk::export_algebra_file(hk::to_file(hk::yau_twist(h.mul(), map, h.basis_names()))));
  } else {
    const hk::HomAkivisAlgebra k = hk::to_hom_akivis(file);
    write_output(out, hk::export_algebra_file(hk::to_file(hk::twist_by_morphism(k, map))));
  }
  return kOk;
}

int check_morphism_cmd(const std::string& map_path, const std::string& src_path, const std::string& dst_path,
                       bool ignore_twist, const std::string& out) {
  const hk::LinearMap f = hk::read_map_file(map_path);
  const hk::AlgebraFile src = hk::read_algebra_file(src_path);
  const hk::AlgebraFile dst = hk::read_algebra_file(dst_path);
  if (src.kind != dst.kind) throw hk::InputError(dst_path, "kind differs from the source file");
  if (f.dim() != src.dim() || f.dim() != dst.dim()) throw hk::InputError(map_path, "dimensions do not match");

  hk::CheckReport r = src.kind == hk::FileKind::algebra
                          ? hk::check_hom_algebra_morphism(f, hk::to_hom_algebra(src), hk::to_hom_algebra(dst))
                          : hk::check_akivis_morphism(f, hk::to_hom_akivis(src), hk::to_hom_akivis(dst), !ignore_twist);
  nlohmann::ordered_json doc;
  doc[std::string(hk::property_name(r.property))] = hk::report_json(r, src.basis);
  write_output(out, hk::dump(doc));
  return r.holds ? kOk : kCheckFailed;
}

int nucleus_cmd(const std::string& path, const std::string& out) {
  const hk::HomAlgebra h = hk::to_hom_algebra(hk::read_algebra_file(path));
  const auto basis = hk::nucleus_basis(h.mul());
  nlohmann::ordered_json doc;
  doc["dimension"] = basis.size();
  nlohmann::ordered_json vectors = nlohmann::ordered_json::array();
  for (const auto& v : basis) {
    nlohmann::ordered_json coords = nlohmann::ordered_json::array();
    for (const auto& c : v.coords()) coords.push_back(hk::to_string(c));
    vectors.push_back(std::move(coords));
  }
  doc["basis"] = std::move(vectors);
  write_output(out, hk::dump(doc));
  return kOk;
}

int demo_cmd(const std::string& name, const std::vector<std::string>& params, const std::string& out) {
  const hk::CatalogEntry* entry = hk::find_catalog_entry(name);
  if (entry == nullptr) {
    std::string known;
    for (const auto& e : hk::catalog()) known += (known.empty() ? "" : ", ") + e.name;
    throw hk::InputError("name", "unknown demo \"" + name + "\" (known: " + known + ")");
  }
  hk::CatalogParams values;
  for (const auto& p : params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos) throw hk::InputError("param", "expected k=v, got \"" + p + "\"");
    values[p.substr(0, eq)] = hk::parse_scalar(p.substr(eq + 1));
  }
  write_output(out, hk::export_algebra_file(hk::to_file(hk::build_entry(*entry, values))));
  return kOk;
}

int random_cmd(const hk::GenConfig& cfg, const std::string& out) {
  write_output(out, hk::export_algebra_file(hk::to_file(hk::random_multiplicative_hom_algebra(cfg))));
  return kOk;
}

void print_witness(const hk::CheckFailed& e, const std::vector<std::string>& names) {
  std::cerr << "error: " << e.what() << "\n" << hk::dump(hk::report_json(e.report(), names));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hom-algebra and Hom-Akivis algebra workbench over the rationals", "homakivis"};
  app.set_version_flag("--version", std::string(hk::tool_version()));
  app.require_subcommand(1);

  std::string path;
  std::string out;

  auto* classify = app.add_subcommand("classify", "Run every applicable identity check; prints a JSON report");
  classify->add_option("file", path, "Algebra file")->required();
  classify->add_option("--out", out, "Write the report here instead of stdout");

  auto* derive = app.add_subcommand("derive", "Write the associated Hom-Akivis algebra of a binary algebra");
  derive->add_option("file", path, "Algebra file (kind \"algebra\")")->required();
  derive->add_option("--out", out, "Output file");

  std::string map_path;
  std::string mode = "yau";
  auto* twist = app.add_subcommand("twist", "Twist along a verified (endo)morphism");
  twist->add_option("file", path, "Algebra file")->required();
  twist->add_option("--map", map_path, "Map file")->required();
  twist->add_option("--mode", mode, "yau (binary algebra) or akivis")->check(CLI::IsMember({"yau", "akivis"}));
  twist->add_option("--out", out, "Output file");

  std::string src_path;
  std::string dst_path;
  bool ignore_twist = false;
  auto* morphism = app.add_subcommand("check-morphism", "Exit 0 if the map is a morphism, 1 if not");
  morphism->add_option("map", map_path, "Map file")->required();
  morphism->add_option("src", src_path, "Source algebra file")->required();
  morphism->add_option("dst", dst_path, "Target algebra file")->required();
  morphism->add_flag("--ignore-twist", ignore_twist, "Akivis files: skip the f . alpha = alpha' . f condition");
  morphism->add_option("--out", out, "Write the report here instead of stdout");

  auto* nucleus = app.add_subcommand("nucleus", "Print a basis of the nucleus of the multiplication");
  nucleus->add_option("file", path, "Algebra file")->required();
  nucleus->add_option("--out", out, "Output file");

  std::string demo_name;
  std::vector<std::string> params;
  auto* demo = app.add_subcommand("demo", "Export a catalog algebra");
  demo->add_option("name", demo_name, "Catalog name")->required();
  demo->add_option("--param", params, "Parameter override k=v (repeatable)");
  demo->add_option("--out", out, "Output file");

  hk::GenConfig cfg;
  auto* random = app.add_subcommand("random", "Export a seeded random multiplicative Hom-algebra");
  random->add_option("--dim", cfg.dim, "Dimension, 2..6")->required();
  random->add_option("--seed", cfg.seed, "Seed")->required();
  random->add_option("--order", cfg.twist_order, "Exact order of the signed-permutation twist")->required();
  random->add_option("--bound", cfg.coeff_bound, "Numerator bound")->capture_default_str();
  random->add_option("--out", out, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  std::vector<std::string> names;
  try {
    if (*classify) return classify_cmd(path, out);
    if (*derive) return derive_cmd(path, out);
    if (*twist) {
      names = hk::read_algebra_file(path).basis;
      return twist_cmd(path, map_path, mode, out);
    }
    if (*morphism) return check_morphism_cmd(map_path, src_path, dst_path, ignore_twist, out);
    if (*nucleus) return nucleus_cmd(path, out);
    if (*demo) return demo_cmd(demo_name, params, out);
    if (*random) return random_cmd(cfg, out);
  } catch (const hk::NotMorphism& e) {
    print_witness(e, names);
    return kCheckFailed;
  } catch (const hk::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
