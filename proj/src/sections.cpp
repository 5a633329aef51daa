#include "bispace/sections.hpp"

namespace bispace {

CrossSection::CrossSection(OrbitPartition partition, std::vector<Point> chosen)
    : partition_(std::move(partition)), chosen_(std::move(chosen)) {
  if (chosen_.size() != partition_.orbit_count())
    throw Error(Errc::NotATransversal, "section must choose one point per orbit");
  for (std::size_t k = 0; k < chosen_.size(); ++k)
    if (project(partition_, chosen_[k]) != k)
      throw Error(Errc::NotATransversal, "chosen point lies in another orbit", {k, chosen_[k]});
}

SubsetOfCarrier CrossSection::image() const {
  return SubsetOfCarrier(partition_.orbit_of().size(), chosen_);
}

namespace {

std::vector<std::size_t> hits_per_orbit(const OrbitPartition& p, const SubsetOfCarrier& A) {
  std::vector<std::size_t> hits(p.orbit_count(), 0);
  for (Point a : A) ++hits[project(p, a)];
  return hits;
}

}  // namespace

bool is_transversal(const OrbitPartition& p, const SubsetOfCarrier& A) {
  for (std::size_t h : hits_per_orbit(p, A))
    if (h != 1) return false;
  return true;
}

CrossSection section_from_transversal(const OrbitPartition& p, const SubsetOfCarrier& A) {
  const auto hits = hits_per_orbit(p, A);
  for (std::size_t k = 0; k < hits.size(); ++k)
    if (hits[k] != 1) throw Error(Errc::NotATransversal, "orbit is not hit exactly once", {k, hits[k]});
  std::vector<Point> chosen(p.orbit_count());
  for (Point a : A) chosen[project(p, a)] = a;
  return CrossSection(p, std::move(chosen));
}

std::size_t transversal_count(const OrbitPartition& p) {
  std::size_t count = 1;
  for (std::size_t k = 0; k < p.orbit_count(); ++k) count *= p.block(k).size();
  return count;
}

std::vector<SubsetOfCarrier> enumerate_transversals(const OrbitPartition& p, std::size_t limit) {
  const std::size_t n = p.orbit_of().size();
  const std::size_t orbits = p.orbit_count();
  std::vector<std::vector<Point>> blocks;
  for (std::size_t k = 0; k < orbits; ++k) blocks.push_back(p.block(k).members());

  std::vector<SubsetOfCarrier> out;
  // Odometer over choice indices, last orbit varying fastest.
  std::vector<std::size_t> idx(orbits, 0);
  while (out.size() < limit) {
    std::vector<Point> chosen(orbits);
    for (std::size_t k = 0; k < orbits; ++k) chosen[k] = blocks[k][idx[k]];
    out.emplace_back(n, std::move(chosen));

    std::size_t k = orbits;
    while (k > 0) {
      --k;
      if (++idx[k] < blocks[k].size()) break;
      idx[k] = 0;
      if (k == 0) return out;
    }
    if (orbits == 0) break;
  }
  return out;
}

}  // namespace bispace
