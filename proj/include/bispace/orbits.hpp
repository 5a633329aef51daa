#pragma once

#include <cstddef>
#include <vector>

#include "bispace/action.hpp"
#include "bispace/error.hpp"
#include "bispace/group.hpp"

namespace bispace {

/// A subset of the carrier {0..n-1}; members kept sorted and unique.
class SubsetOfCarrier {
 public:
  SubsetOfCarrier() = default;
  /// Throws IndexOutOfRange for members outside the carrier.
  SubsetOfCarrier(std::size_t carrier_size, std::vector<Point> members);

  static SubsetOfCarrier full(std::size_t carrier_size);
  static SubsetOfCarrier singleton(std::size_t carrier_size, Point x);

  std::size_t carrier_size() const noexcept { return n_; }
  const std::vector<Point>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Point x) const;
  bool is_subset_of(const SubsetOfCarrier& other) const;

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  friend bool operator==(const SubsetOfCarrier&, const SubsetOfCarrier&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Point> members_;
};

SubsetOfCarrier intersect(const SubsetOfCarrier& a, const SubsetOfCarrier& b);
SubsetOfCarrier unite(const SubsetOfCarrier& a, const SubsetOfCarrier& b);

/// K(A, B) = { g(a, b) : g in K, a in A, b in B }.
SubsetOfCarrier apply_set(const BinaryAction& act, const ElemSet& K, const SubsetOfCarrier& A,
                          const SubsetOfCarrier& B);

/// G(A, A) = A.
bool is_bi_invariant(const BinaryAction& act, const SubsetOfCarrier& A);

struct Saturation {
  SubsetOfCarrier set;
  /// Number of rounds A^k = G(A^{k-1}, A^{k-1}) (with A^0 = A) performed
  /// until a round adds nothing; 1 when A is already bi-invariant.
  std::size_t depth = 0;
};

/// Least bi-invariant superset of A. Throws EmptyInput.
Saturation saturate(const BinaryAction& act, const SubsetOfCarrier& A);

/// [x], the least bi-invariant set containing x.
SubsetOfCarrier orbit(const BinaryAction& act, Point x);

/// The orbit space X|G of a distributive action.
class OrbitPartition {
 public:
  OrbitPartition(ActionPtr action, std::vector<std::size_t> orbit_of, std::vector<Point> representatives);

  const BinaryAction& action() const noexcept { return *action_; }
  const ActionPtr& action_ptr() const noexcept { return action_; }
  std::size_t orbit_count() const noexcept { return representatives_.size(); }
  const std::vector<std::size_t>& orbit_of() const noexcept { return orbit_of_; }
  const std::vector<Point>& representatives() const noexcept { return representatives_; }
  /// Members of orbit k in ascending order.
  SubsetOfCarrier block(std::size_t k) const;

 private:
  ActionPtr action_;
  std::vector<std::size_t> orbit_of_;
  std::vector<Point> representatives_;
};

/// Partitions the carrier into orbits; ids follow the ascending smallest
/// member. Throws NotDistributive (with the distributivity witness) and,
/// as an internal consistency check, OverlappingOrbits.
OrbitPartition orbit_partition(ActionPtr act);

/// pi(x). Throws IndexOutOfRange.
std::size_t project(const OrbitPartition& p, Point x);

}  // namespace bispace
