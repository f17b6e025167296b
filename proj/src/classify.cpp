#include "homakivis/classify.hpp"

namespace homakivis {

const CheckReport* Classification::find(std::string_view name) const {
  for (const auto& [key, report] : properties) {
    if (key == name) return &report;
  }
  return nullptr;
}

namespace {

void add_bracket_properties(Classification& c, const HomBracketAlgebra& b) {
  c.properties.emplace_back("jacobi", is_jacobi(b.bracket()));
  c.properties.emplace_back("hom_jacobi", is_hom_jacobi(b));
  c.properties.emplace_back("malcev", is_malcev(b.bracket()));
  c.properties.emplace_back("hom_malcev", is_hom_malcev(b));
}

}  // namespace

Classification classify(const HomAlgebra& h) {
  Classification c;
  c.properties.emplace_back("associative", is_associative(h));
  c.properties.emplace_back("hom_associative", is_hom_associative(h));
  c.properties.emplace_back("multiplicative", is_multiplicative(h));
  c.properties.emplace_back("hom_flexible", is_hom_flexible(h));
  CheckReport alternative = is_hom_alternative(h);
  const bool is_alternative = alternative.holds;
  c.properties.emplace_back("hom_alternative", std::move(alternative));

  const HomAkivisAlgebra k = associated_hom_akivis(h);
  c.properties.emplace_back("associated_hom_akivis", is_hom_akivis(k));
  c.properties.emplace_back("associated_multiplicative", is_multiplicative(k));
  if (h.mul().is_skew()) add_bracket_properties(c, HomBracketAlgebra::of(h));
  if (is_hom_flexible_akivis(k).holds) {
    c.properties.emplace_back("flexible_jacobi_relation", check_flexible_jacobi_relation(k));
  }
  if (is_alternative) c.properties.emplace_back("malcev_pipeline", malcev_pipeline(h));
  return c;
}

Classification classify(const HomAkivisAlgebra& k) {
  Classification c;
  c.properties.emplace_back("hom_akivis", is_hom_akivis(k));
  c.properties.emplace_back("akivis", is_akivis(k));
  c.properties.emplace_back("multiplicative", is_multiplicative(k));
  CheckReport flexible = is_hom_flexible_akivis(k);
  CheckReport alternative = is_hom_alternative_akivis(k);
  const bool is_flexible = flexible.holds;
  const bool is_alternative = alternative.holds;
  c.properties.emplace_back("hom_flexible", std::move(flexible));
  c.properties.emplace_back("hom_alternative", std::move(alternative));
  add_bracket_properties(c, HomBracketAlgebra::of(k));
  if (is_flexible) c.properties.emplace_back("flexible_jacobi_relation", check_flexible_jacobi_relation(k));
  if (is_alternative) c.properties.emplace_back("alternative_jacobi_relation", check_alternative_jacobi_relation(k));
  return c;
}

std::vector<AuditLine> audit_catalog() {
  std::vector<AuditLine> lines;
  for (const auto& entry : catalog()) {
    const Classification c = classify(build_entry(entry));
    for (const auto& e : entry.expectations) {
      const CheckReport* r = c.find(e.property);
      lines.push_back({entry.name, e.property, e.holds, r != nullptr && r->holds, e.source});
    }
  }
  return lines;
}

}  // namespace homakivis
