#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "homakivis/hom_akivis.hpp"
#include "homakivis/hom_algebra.hpp"
#include "homakivis/linear.hpp"

namespace homakivis {

/// Basis (u, v, w); mu(u,u) = a u, mu(v,v) = a v, mu(u,v) = mu(v,u) = a v,
/// mu(v,w) = b w, mu(u,w) = mu(w,u) = b w, other products zero;
/// alpha(u) = a v, alpha(v) = a w, alpha(w) = b u. Throws ZeroParameter
/// if a or b is zero.
HomAlgebra build_three_dim_family(const Scalar& a, const Scalar& b);

/// sl(2) on (u, v, w) with [u,v] = -2u, [u,w] = v, [v,w] = -2w, used as the
/// multiplication; twist u -> w, v -> -v, w -> u.
HomAlgebra build_sl2();

/// Five-dimensional flexible algebra on e1..e5 with twist
/// e1 <-> e2, e3 -> 0, e4 -> -e4, e5 -> e5.
HomAlgebra build_myung5();
LinearMap myung5_twist();

/// The commutator table of build_myung5 (a solvable non-Lie bracket),
/// with the same twist.
HomBracketAlgebra build_kuzmin5();
/// The same structure with the bracket read as a multiplication.
HomAlgebra build_kuzmin5_hom_algebra();

struct UnitalAlgebra {
  BilinearMap mul;
  Vector one;
  std::vector<std::string> basis_names;
};

/// 2x2 rational matrices on E11, E12, E21, E22.
UnitalAlgebra build_mat2();

/// Octonions on e0 (unit), e1..e7 with e_i^2 = -e0 and e_a e_b = e_c for
/// the lines (1,2,4), (2,3,5), (3,4,6), (4,5,7), (5,6,1), (6,7,2), (7,1,3)
/// read cyclically.
BilinearMap build_octonions();
/// e_i -> e_{2i mod 7} on e1..e6, fixing e0 and e7. Order 3.
LinearMap octonion_rotation();
/// Yau twist of the octonions by octonion_rotation. Throws NotMorphism if
/// the rotation fails the automorphism check.
HomAlgebra build_octonions_twisted();

/// A property verdict the classifier must reproduce on an entry.
struct Expectation {
  std::string property;
  bool holds;
  /// "stated" for verdicts recorded with the algebra, "derived" for
  /// verdicts established by independent computation.
  std::string source;
};

using CatalogParams = std::map<std::string, Scalar>;

struct CatalogEntry {
  std::string name;
  std::vector<std::string> aliases;
  std::string summary;
  CatalogParams defaults;
  std::function<HomAlgebra(const CatalogParams&)> build;
  std::vector<Expectation> expectations;
};

const std::vector<CatalogEntry>& catalog();
/// By name or alias; nullptr when unknown.
const CatalogEntry* find_catalog_entry(const std::string& name);
/// Builds with defaults overridden by `params`. Throws InputError for a
/// parameter the entry does not take.
HomAlgebra build_entry(const CatalogEntry& entry, const CatalogParams& params = {});

}  // namespace homakivis
