#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "homakivis/catalog.hpp"
#include "homakivis/check.hpp"
#include "homakivis/hom_akivis.hpp"
#include "homakivis/hom_algebra.hpp"

namespace homakivis {

/// Named verdicts in a fixed order.
struct Classification {
  std::vector<std::pair<std::string, CheckReport>> properties;

  const CheckReport* find(std::string_view name) const;
};

/// Binary Hom-algebra: associative, hom_associative, multiplicative,
/// hom_flexible, hom_alternative, associated_hom_akivis,
/// associated_multiplicative; for a skew multiplication also jacobi,
/// hom_jacobi, malcev, hom_malcev; flexible_jacobi_relation of the
/// associated structure when it is Hom-flexible; malcev_pipeline when the
/// algebra is Hom-alternative.
Classification classify(const HomAlgebra& h);

/// Hom-Akivis structure: hom_akivis, akivis, multiplicative, hom_flexible,
/// hom_alternative, jacobi, hom_jacobi, malcev, hom_malcev, plus
/// flexible_jacobi_relation / alternative_jacobi_relation when their
/// preconditions hold.
Classification classify(const HomAkivisAlgebra& k);

struct AuditLine {
  std::string entry;
  std::string property;
  bool expected;
  bool computed;
  std::string source;

  bool agrees() const { return expected == computed; }
};

/// Classifies every catalog entry at its defaults and compares with the
/// recorded expectations.
std::vector<AuditLine> audit_catalog();

}  // namespace homakivis
