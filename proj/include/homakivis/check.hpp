#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "homakivis/errors.hpp"
#include "homakivis/linear.hpp"
#include "homakivis/random.hpp"

namespace homakivis {

enum class Property {
  // binary Hom-algebras
  associative,
  hom_associative,
  multiplicative,
  hom_flexible,
  hom_alternative,
  twisted_associator,
  morphism,
  finite_order,
  // bracket and Hom-Akivis structures
  hom_akivis,
  akivis,
  hom_jacobi,
  jacobi,
  hom_malcev,
  malcev,
  akivis_morphism,
  flexible_jacobi_relation,
  alternative_jacobi_relation,
  associator_commutator_relation,
  malcev_pipeline,
  // parts of composite reports
  linearized,
  quadratic,
  polarized,
  basis_triples,
  random_samples,
  left_alternative,
  right_alternative,
  preserves_product,
  preserves_bracket,
  preserves_ternary,
  commutes_with_twist,
  twice_cyclic_ternary,
  cyclic_ternary_zero,
  hom_lie_iff_cyclic_zero,
  six_times_ternary,
  six_times_cyclic_ternary,
};

std::string_view property_name(Property p);

/// A failing evaluation: the arguments (basis vectors for basis sweeps,
/// with their indices) and the two unequal sides.
struct Witness {
  std::vector<std::size_t> indices;
  std::vector<Vector> arguments;
  Vector lhs;
  Vector rhs;
};

/// Verdict for one identity. `witness` is set iff `holds` is false.
/// Composite checks list their sub-verdicts in `parts`; informational
/// parts may fail without failing the whole report.
struct CheckReport {
  explicit CheckReport(Property p, bool holds = true, std::optional<Witness> witness = std::nullopt,
                       std::vector<CheckReport> parts = {})
      : property(p), holds(holds), witness(std::move(witness)), parts(std::move(parts)) {}

  Property property;
  bool holds;
  std::optional<Witness> witness;
  std::vector<CheckReport> parts;

  /// First part with the given property, or nullptr.
  const CheckReport* part(Property p) const;
  explicit operator bool() const noexcept { return holds; }
};

/// An identity lhs(args) = rhs(args) in `arity` vector arguments.
struct Identity {
  using Sides = std::function<std::pair<Vector, Vector>(std::span<const Vector>)>;

  Property property;
  std::size_t arity;
  Sides sides;
};

/// Evaluates the identity at the given arguments; a witness when the
/// sides differ.
std::optional<Witness> evaluate_at(const Identity& id, std::span<const Vector> args);
/// Evaluates at basis vectors e_{indices[0]}, e_{indices[1]}, ...
std::optional<Witness> witness_at(const Identity& id, std::size_t dim, std::span<const std::size_t> indices);

/// Checks every basis tuple in lexicographic order; the witness is the
/// first failing tuple. Exact test for identities linear in each argument.
CheckReport sweep_basis(const Identity& id, std::size_t dim);
CheckReport sweep_basis(const Identity& id, std::size_t dim, Property reported_as);

/// Evaluates the identity at `count` seeded random rational tuples.
CheckReport sweep_samples(const Identity& id, std::size_t dim, std::size_t count,
                          std::uint64_t seed = kDefaultSampleSeed);

/// For an identity quadratic in its first argument and linear in the
/// rest: the symmetric bilinear polarization in (x, x'), i.e.
/// f(x + x', ...) - f(x, ...) - f(x', ...). The result is multilinear in
/// arity + 1 arguments, so its basis sweep is an exact test.
Identity polarize_first(const Identity& id);

/// holds iff every part holds; the witness is copied from the first
/// failing part.
CheckReport all_of(Property p, std::vector<CheckReport> parts);

/// Raised by operations whose precondition is a checkable identity; the
/// failed report (with witness) is attached.
class CheckFailed : public Error {
 public:
  CheckFailed(const std::string& message, CheckReport report) : Error(message), report_(std::move(report)) {}
  const CheckReport& report() const noexcept { return report_; }

 private:
  CheckReport report_;
};

/// A map failed the (endo)morphism check required by a twist.
class NotMorphism : public CheckFailed {
 public:
  using CheckFailed::CheckFailed;
};

class PreconditionFailed : public CheckFailed {
 public:
  using CheckFailed::CheckFailed;
};

}  // namespace homakivis
