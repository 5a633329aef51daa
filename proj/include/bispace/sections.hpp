#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "bispace/orbits.hpp"

namespace bispace {

/// A cross section sigma : X|G -> X of the orbit projection, stored as its
/// choice vector. On a finite discrete carrier every subset is closed, so a
/// section is the same thing as a transversal of the orbit partition.
class CrossSection {
 public:
  CrossSection(OrbitPartition partition, std::vector<Point> chosen);

  const OrbitPartition& partition() const noexcept { return partition_; }
  /// sigma(k) for every orbit id k.
  const std::vector<Point>& chosen() const noexcept { return chosen_; }
  Point operator()(std::size_t orbit_id) const { return chosen_[orbit_id]; }
  /// The image set sigma(X|G).
  SubsetOfCarrier image() const;

 private:
  OrbitPartition partition_;
  std::vector<Point> chosen_;
};

/// True iff A meets every orbit in exactly one point.
bool is_transversal(const OrbitPartition& p, const SubsetOfCarrier& A);

/// sigma(x*) = the unique point of A in orbit x*. Throws NotATransversal
/// with witness (orbit id, hit count).
CrossSection section_from_transversal(const OrbitPartition& p, const SubsetOfCarrier& A);

/// Number of transversals: the product of the orbit sizes.
std::size_t transversal_count(const OrbitPartition& p);

/// Transversals in lexicographic order of their choice vectors (orbit 0
/// most significant), at most `limit` of them.
std::vector<SubsetOfCarrier> enumerate_transversals(const OrbitPartition& p,
                                                    std::size_t limit = std::numeric_limits<std::size_t>::max());

}  // namespace bispace
