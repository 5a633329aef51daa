#include "bispace/orbits.hpp"

#include <algorithm>
#include <iterator>

namespace bispace {

SubsetOfCarrier::SubsetOfCarrier(std::size_t carrier_size, std::vector<Point> members)
    : n_(carrier_size), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && members_.back() >= n_)
    throw Error(Errc::IndexOutOfRange, "subset member outside carrier", {members_.back()});
}

SubsetOfCarrier SubsetOfCarrier::full(std::size_t carrier_size) {
  std::vector<Point> all(carrier_size);
  for (Point x = 0; x < carrier_size; ++x) all[x] = x;
  return SubsetOfCarrier(carrier_size, std::move(all));
}

SubsetOfCarrier SubsetOfCarrier::singleton(std::size_t carrier_size, Point x) {
  return SubsetOfCarrier(carrier_size, {x});
}

bool SubsetOfCarrier::contains(Point x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

bool SubsetOfCarrier::is_subset_of(const SubsetOfCarrier& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

SubsetOfCarrier intersect(const SubsetOfCarrier& a, const SubsetOfCarrier& b) {
  std::vector<Point> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return SubsetOfCarrier(a.carrier_size(), std::move(out));
}

SubsetOfCarrier unite(const SubsetOfCarrier& a, const SubsetOfCarrier& b) {
  std::vector<Point> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return SubsetOfCarrier(a.carrier_size(), std::move(out));
}

SubsetOfCarrier apply_set(const BinaryAction& act, const ElemSet& K, const SubsetOfCarrier& A,
                          const SubsetOfCarrier& B) {
  const std::size_t n = act.carrier_size();
  std::vector<bool> hit(n, false);
  for (Elem g : K) {
    if (g >= act.group().order()) throw Error(Errc::IndexOutOfRange, "group element out of range", {g});
    for (Point a : A)
      for (Point b : B) hit[act(g, a, b)] = true;
  }
  std::vector<Point> out;
  for (Point x = 0; x < n; ++x)
    if (hit[x]) out.push_back(x);
  return SubsetOfCarrier(n, std::move(out));
}

bool is_bi_invariant(const BinaryAction& act, const SubsetOfCarrier& A) {
  return apply_set(act, all_elements(act.group()), A, A) == A;
}

Saturation saturate(const BinaryAction& act, const SubsetOfCarrier& A) {
  if (A.empty()) throw Error(Errc::EmptyInput, "cannot saturate the empty set");
  const std::size_t n = act.carrier_size();
  const std::size_t m = act.group().order();

  std::vector<bool> in(n, false);
  std::vector<Point> current(A.begin(), A.end());
  for (Point x : current) in[x] = true;
  // Pairs with both ends outside the frontier were handled in an earlier round.
  std::vector<bool> fresh = in;

  std::size_t depth = 0;
  for (;;) {
    ++depth;
    std::vector<Point> added;
    for (Point u : current)
      for (Point v : current) {
        if (!fresh[u] && !fresh[v]) continue;
        for (Elem g = 0; g < m; ++g) {
          const Point w = act(g, u, v);
          if (!in[w]) {
            in[w] = true;
            added.push_back(w);
          }
        }
      }
    if (added.empty()) break;
    std::fill(fresh.begin(), fresh.end(), false);
    for (Point w : added) fresh[w] = true;
    current.insert(current.end(), added.begin(), added.end());
  }
  return {SubsetOfCarrier(n, std::move(current)), depth};
}

SubsetOfCarrier orbit(const BinaryAction& act, Point x) {
  if (x >= act.carrier_size()) throw Error(Errc::IndexOutOfRange, "point outside carrier", {x});
  return saturate(act, SubsetOfCarrier::singleton(act.carrier_size(), x)).set;
}

OrbitPartition::OrbitPartition(ActionPtr action, std::vector<std::size_t> orbit_of,
                               std::vector<Point> representatives)
    : action_(std::move(action)), orbit_of_(std::move(orbit_of)), representatives_(std::move(representatives)) {}

SubsetOfCarrier OrbitPartition::block(std::size_t k) const {
  std::vector<Point> out;
  for (Point x = 0; x < orbit_of_.size(); ++x)
    if (orbit_of_[x] == k) out.push_back(x);
  return SubsetOfCarrier(orbit_of_.size(), std::move(out));
}

OrbitPartition orbit_partition(ActionPtr act) {
  if (auto v = is_distributive(*act); !v)
    throw Error(Errc::NotDistributive, "orbit space is defined only for distributive actions", *v.witness);

  const std::size_t n = act->carrier_size();
  constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> orbit_of(n, unassigned);
  std::vector<Point> reps;
  for (Point x = 0; x < n; ++x) {
    if (orbit_of[x] != unassigned) continue;
    const SubsetOfCarrier block = orbit(*act, x);
    for (Point y : block) {
      if (orbit_of[y] != unassigned)
        throw Error(Errc::OverlappingOrbits, "distinct orbits share a point", {x, y});
      orbit_of[y] = reps.size();
    }
    for (Point y : block)
      if (orbit(*act, y) != block) throw Error(Errc::OverlappingOrbits, "orbit of a member differs", {x, y});
    reps.push_back(x);
  }
  return OrbitPartition(std::move(act), std::move(orbit_of), std::move(reps));
}

std::size_t project(const OrbitPartition& p, Point x) {
  if (x >= p.orbit_of().size()) throw Error(Errc::IndexOutOfRange, "point outside carrier", {x});
  return p.orbit_of()[x];
}

}  // namespace bispace
