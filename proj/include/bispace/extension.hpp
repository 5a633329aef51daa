#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "bispace/action.hpp"
#include "bispace/orbits.hpp"
#include "bispace/sections.hpp"

namespace bispace {

/// f : A -> Y for a subset A of the source carrier. Source and target must
/// be binary actions of the same group (GroupMismatch otherwise).
class PartialEquivariantMap {
 public:
  /// `values[i]` is the image of the i-th member of `domain`.
  PartialEquivariantMap(ActionPtr source, ActionPtr target, SubsetOfCarrier domain, std::vector<Point> values);

  /// Builds from (a, f(a)) pairs; repeated points must agree.
  static PartialEquivariantMap from_pairs(ActionPtr source, ActionPtr target,
                                          const std::vector<std::pair<Point, Point>>& pairs);

  const BinaryAction& source() const noexcept { return *source_; }
  const BinaryAction& target() const noexcept { return *target_; }
  const ActionPtr& source_ptr() const noexcept { return source_; }
  const ActionPtr& target_ptr() const noexcept { return target_; }
  const SubsetOfCarrier& domain() const noexcept { return domain_; }
  /// Image of a domain point; throws IndexOutOfRange outside the domain.
  Point operator()(Point a) const;
  std::vector<std::pair<Point, Point>> pairs() const;

 private:
  ActionPtr source_;
  ActionPtr target_;
  SubsetOfCarrier domain_;
  std::vector<Point> values_;
};

/// A map defined on a bi-invariant subset of the source carrier (the whole
/// carrier unless built by a saturation-based extension). `certified()` is
/// only ever set by `certify` after an exhaustive bi-equivariance check.
class TotalEquivariantMap {
 public:
  static constexpr Point undefined = static_cast<Point>(-1);

  /// Map on the whole source carrier.
  TotalEquivariantMap(ActionPtr source, ActionPtr target, std::vector<Point> values);
  /// Map on `domain`; entries of `values` outside it must be `undefined`.
  TotalEquivariantMap(ActionPtr source, ActionPtr target, SubsetOfCarrier domain, std::vector<Point> values);

  const BinaryAction& source() const noexcept { return *source_; }
  const BinaryAction& target() const noexcept { return *target_; }
  const ActionPtr& source_ptr() const noexcept { return source_; }
  const ActionPtr& target_ptr() const noexcept { return target_; }
  const SubsetOfCarrier& domain() const noexcept { return domain_; }
  const std::vector<Point>& values() const noexcept { return values_; }
  Point operator()(Point x) const { return values_[x]; }
  bool certified() const noexcept { return certified_; }

  friend Verdict certify(TotalEquivariantMap& f);

  /// Compares domains and values; the certification flag is ignored.
  friend bool operator==(const TotalEquivariantMap& a, const TotalEquivariantMap& b) {
    return a.domain_ == b.domain_ && a.values_ == b.values_;
  }

 private:
  ActionPtr source_;
  ActionPtr target_;
  SubsetOfCarrier domain_;
  std::vector<Point> values_;
  bool certified_ = false;
};

/// f(g(x1,x2)) = g(f(x1), f(x2)) for all g and x1, x2 in the domain.
/// Witness (g, x1, x2). A domain that is not closed under the source action
/// also fails, with the offending triple.
Verdict is_biequivariant(const TotalEquivariantMap& f);

/// Runs is_biequivariant and records a pass in the map's certified flag.
Verdict certify(TotalEquivariantMap& f);

PartialEquivariantMap restrict_to(const TotalEquivariantMap& f, const SubsetOfCarrier& A);

/// Whenever a1, a2 and g(a1,a2) all lie in A: f(g(a1,a2)) = g(f(a1),f(a2)).
/// Witness (g, a1, a2).
Verdict check_sm1(const PartialEquivariantMap& f);

/// One derivation step: `result` labeled from g(x1, x2).
struct DerivationStep {
  Elem g;
  Point x1;
  Point x2;
  Point result;

  friend bool operator==(const DerivationStep&, const DerivationStep&) = default;
};

/// Steps in dependency order; seeds (points of A) contribute no step.
using Derivation = std::vector<DerivationStep>;

struct ExtensionConflict {
  enum class Kind {
    /// The map already disagrees with the action inside its own domain.
    Sm1Violation,
    /// Two bracket expressions with the same value receive different labels.
    Conflict,
  };
  Kind kind;
  Point point;
  Point first_label;
  Point second_label;
  Derivation first;
  Derivation second;
};

using StructuralExtension = std::variant<TotalEquivariantMap, ExtensionConflict>;

/// The unique bi-equivariant extension of f over the saturation of its
/// domain, computed by label propagation to a fixpoint. The returned map is
/// certified. A structural-condition violation surfaces as a conflict.
StructuralExtension extend_structural(const PartialEquivariantMap& f);

/// Brute-force structural-condition oracle. Enumerates the value pairs
/// (x, x relabeled through f) of every bracket expression over the domain
/// of nesting depth <= max_depth, and checks that equal values never get
/// different relabelings. Witness (x, y1, y2). Throws BudgetExceeded once
/// more than `budget` bracket combinations would be evaluated, and
/// Malformed when max_depth is zero.
Verdict check_sm2_bounded(const PartialEquivariantMap& f, std::size_t max_depth,
                          std::size_t budget = 50'000'000);

/// G_(x, x') = { g : g(x, x') = x' }.
struct IsotropySubgroup {
  Point x;
  Point xp;
  ElemSet members;
};

IsotropySubgroup isotropy_group(const BinaryAction& a, Point x, Point xp);

/// Condition (*) over the domain A of f, which must be a transversal of the
/// (distributive) source:
///   g(a,a) = h(k(a',a'), s(a'',a''))  implies
///   g(f a, f a) = h(k(f a', f a'), s(f a'', f a'')).
/// Witness (g, h, k, s, a, a', a''). Throws NotDistributive, NotATransversal.
Verdict check_star_condition(const PartialEquivariantMap& f);

/// f~(x) = g(f(a), f(a)) where a is the section point in x's orbit and g is
/// the least element with g(a, a) = x. Requires both actions distributive
/// (NotDistributive), the domain to be a transversal (NotATransversal) and
/// condition (*) (StarConditionFailed). The returned map is certified.
TotalEquivariantMap extend_from_section(const PartialEquivariantMap& f);

/// G_(a,a') subset of G_(f a, f a') for every pair in the domain.
/// Witness (a, a', g) with g in the first group but not the second.
Verdict check_isotropy_condition(const PartialEquivariantMap& f);

}  // namespace bispace
