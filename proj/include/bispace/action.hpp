#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "bispace/error.hpp"
#include "bispace/group.hpp"

namespace bispace {

/// Nested action table indexed [g][x1][x2].
using ActionTable = std::vector<std::vector<std::vector<Point>>>;
/// Ordinary action table indexed [g][x].
using OrdinaryTable = std::vector<std::vector<Point>>;

/// A binary action of a finite group on the carrier {0..n-1}, stored as a
/// dense lookup table and validated on construction:
///   act(g*h, x1, x2) = act(g, x1, act(h, x1, x2)),   act(e, x1, x2) = x2,
/// and x2 -> act(g, x1, x2) is a bijection undone by g^-1.
class BinaryAction {
 public:
  /// Throws Malformed on shape errors, IndexOutOfRange on bad entries,
  /// IdentityAxiomFailed (x1,x2), CompositionAxiomFailed (g,h,x1,x2),
  /// NotInvertible (g,x1).
  BinaryAction(GroupPtr group, std::size_t carrier_size, const ActionTable& act);

  const FiniteGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  std::size_t carrier_size() const noexcept { return n_; }

  /// Unchecked lookup.
  Point operator()(Elem g, Point x1, Point x2) const { return act_[(g * n_ + x1) * n_ + x2]; }

  ActionTable table() const;

  friend bool operator==(const BinaryAction& a, const BinaryAction& b) {
    return a.n_ == b.n_ && *a.group_ == *b.group_ && a.act_ == b.act_;
  }

 private:
  GroupPtr group_;
  std::size_t n_;
  std::vector<Point> act_;
};

using ActionPtr = std::shared_ptr<const BinaryAction>;

/// An n x n table of carrier indices: an element of the composition monoid
/// with product (f o g)(x, x') = f(x, g(x, x')).
class BinaryOperation {
 public:
  explicit BinaryOperation(std::vector<std::vector<Point>> table);

  /// e(x, x') = x'.
  static BinaryOperation identity(std::size_t n);

  std::size_t carrier_size() const noexcept { return table_.size(); }
  Point operator()(Point x, Point xp) const { return table_[x][xp]; }
  const std::vector<std::vector<Point>>& table() const noexcept { return table_; }

  friend bool operator==(const BinaryOperation&, const BinaryOperation&) = default;

 private:
  std::vector<std::vector<Point>> table_;
};

BinaryAction action_from_table(GroupPtr G, std::size_t n, const ActionTable& act);

/// Bounds-checked lookup; throws IndexOutOfRange.
Point evaluate(const BinaryAction& a, Elem g, Point x1, Point x2);

enum class SelfActionVariant {
  /// g(g1, g2) = g1 g g1^-1 g2
  Distributive,
  /// g(g1, g2) = g1^-1 g g1 g2
  Conjugate,
};

BinaryAction canonical_self_action(GroupPtr G, SelfActionVariant variant);

/// Checks g(h(x,x1), h(x,x2)) = h(x, g(x1,x2)) for every (g,h,x,x1,x2);
/// the witness is the lexicographically first failing tuple.
Verdict is_distributive(const BinaryAction& a);

/// Checks rho(e,x) = x and rho(gh,x) = rho(g, rho(h,x)). Witness is (x) for
/// the identity law and (g,h,x) for the composition law.
Verdict is_ordinary_action(const FiniteGroup& G, std::size_t n, const OrdinaryTable& rho);

/// act(g, x1, x2) = rho(g, x2). Throws NotAnOrdinaryAction.
BinaryAction from_ordinary_action(GroupPtr G, std::size_t n, const OrdinaryTable& rho);

/// The ordinary action g, x2 -> act(g, x1, x2) obtained by freezing x1.
OrdinaryTable family_at(const BinaryAction& a, Point x1);

/// act(g, x1, x2) = family[x1](g, x2). Throws MemberNotAnAction with
/// witness (x1, ...) when a member is not an ordinary action.
BinaryAction from_family(GroupPtr G, std::size_t n, const std::vector<OrdinaryTable>& family);

/// (f o g)(x, x') = f(x, g(x, x')). Throws CarrierMismatch.
BinaryOperation compose_binary_ops(const BinaryOperation& f, const BinaryOperation& g);

/// The operation (x, x') -> act(g, x, x').
BinaryOperation operation_of(const BinaryAction& a, Elem g);

}  // namespace bispace
