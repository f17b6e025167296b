#include "homakivis/report.hpp"

#include <array>
#include <cstdio>

#include <openssl/evp.h>

#include "homakivis/errors.hpp"

namespace homakivis {

using Json = nlohmann::ordered_json;

namespace {

Json coords(const Vector& v) {
  Json a = Json::array();
  for (const auto& c : v.coords()) a.push_back(to_string(c));
  return a;
}

}  // namespace

std::string_view tool_version() { return HOMAKIVIS_VERSION; }

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 computation failed");
  }
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

Json report_json(const CheckReport& r, const std::vector<std::string>& basis_names) {
  Json j;
  j["holds"] = r.holds;
  if (r.witness) {
    const Witness& w = *r.witness;
    Json wj;
    if (!w.indices.empty()) {
      wj["indices"] = w.indices;
      Json names = Json::array();
      for (auto i : w.indices) names.push_back(i < basis_names.size() ? basis_names[i] : "e" + std::to_string(i));
      wj["names"] = std::move(names);
    } else {
      Json args = Json::array();
      for (const auto& a : w.arguments) args.push_back(coords(a));
      wj["arguments"] = std::move(args);
    }
    wj["lhs"] = coords(w.lhs);
    wj["rhs"] = coords(w.rhs);
    j["witness"] = std::move(wj);
  }
  if (!r.parts.empty()) {
    Json parts = Json::object();
    for (const auto& p : r.parts) parts[std::string(property_name(p.property))] = report_json(p, basis_names);
    j["parts"] = std::move(parts);
  }
  return j;
}

Json report_json(const Classification& c, const std::vector<std::string>& basis_names, std::string_view input_bytes) {
  Json doc;
  Json props = Json::object();
  for (const auto& [name, r] : c.properties) props[name] = report_json(r, basis_names);
  doc["properties"] = std::move(props);
  doc["provenance"] = Json{{"tool", "homakivis"}, {"version", tool_version()}, {"input_sha256", sha256_hex(input_bytes)}};
  return doc;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace homakivis
