#include "bispace/search.hpp"

#include <future>
#include <numeric>
#include <vector>

#include "bispace/orbits.hpp"

namespace bispace {

Engine trial_engine(std::uint64_t seed, std::uint64_t t) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(t >> 32)};
  return Engine(seq);
}

namespace {

std::size_t draw_below(Engine& rng, std::size_t bound) { return static_cast<std::size_t>(rng() % bound); }

using Perm = std::vector<Point>;

/// Random permutation whose cycle lengths all divide `order`: shuffle the
/// points, then cut the shuffled sequence into cycles of admissible length.
Perm random_perm_of_order_dividing(std::size_t n, std::size_t order, Engine& rng) {
  std::vector<Point> pts(n);
  std::iota(pts.begin(), pts.end(), Point{0});
  for (std::size_t i = n; i > 1; --i) std::swap(pts[i - 1], pts[draw_below(rng, i)]);

  Perm p(n);
  std::size_t pos = 0;
  while (pos < n) {
    std::vector<std::size_t> lengths;
    for (std::size_t d = 1; d <= std::min(order, n - pos); ++d)
      if (order % d == 0) lengths.push_back(d);
    const std::size_t len = lengths[draw_below(rng, lengths.size())];
    for (std::size_t i = 0; i < len; ++i) p[pts[pos + i]] = pts[pos + (i + 1) % len];
    pos += len;
  }
  return p;
}

}  // namespace

std::optional<OrdinaryTable> random_ordinary_action(const FiniteGroup& G, std::size_t n, Engine& rng,
                                                    std::size_t attempts) {
  const ElemSet gens = G.generators();
  const std::size_t m = G.order();
  for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
    std::vector<Perm> image(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i)
      image[i] = random_perm_of_order_dividing(n, G.element_order(gens[i]), rng);

    // rho(x s) = rho(x) o rho(s) along every Cayley-graph edge; together
    // with rho(e) = id this is exactly the homomorphism property.
    std::vector<std::optional<Perm>> rho(m);
    Perm id(n);
    std::iota(id.begin(), id.end(), Point{0});
    rho[G.identity()] = id;
    std::vector<Elem> queue{G.identity()};
    bool ok = true;
    for (std::size_t qi = 0; qi < queue.size() && ok; ++qi) {
      const Elem x = queue[qi];
      for (std::size_t i = 0; i < gens.size() && ok; ++i) {
        const Elem y = G.mul(x, gens[i]);
        Perm py(n);
        for (Point p = 0; p < n; ++p) py[p] = (*rho[x])[image[i][p]];
        if (!rho[y]) {
          rho[y] = std::move(py);
          queue.push_back(y);
        } else if (*rho[y] != py) {
          ok = false;
        }
      }
    }
    if (!ok) continue;
    OrdinaryTable table(m);
    for (Elem g = 0; g < m; ++g) table[g] = std::move(*rho[g]);
    return table;
  }
  return std::nullopt;
}

BinaryAction random_binary_action(const SearchConfig& cfg) {
  if (!cfg.group) throw Error(Errc::Malformed, "search config has no group");
  if (cfg.carrier_size == 0 || cfg.max_trials == 0) throw Error(Errc::Malformed, "carrier and trials must be positive");
  Engine rng = trial_engine(cfg.seed, 0);
  std::vector<OrdinaryTable> family;
  for (Point x1 = 0; x1 < cfg.carrier_size; ++x1) {
    auto member = random_ordinary_action(*cfg.group, cfg.carrier_size, rng, cfg.max_trials);
    if (!member) throw Error(Errc::TrialsExhausted, "no homomorphism drawn for family member", {x1});
    family.push_back(std::move(*member));
  }
  return from_family(cfg.group, cfg.carrier_size, family);
}

namespace {

/// Runs `trial(t)` for t = 0..max_trials-1 and returns the result of the
/// lowest t that produced one, whatever order the workers finish in.
template <class Result, class Trial>
std::optional<Result> first_success(const SearchConfig& cfg, Trial trial) {
  const std::size_t workers = std::max<std::size_t>(1, cfg.threads);
  for (std::size_t base = 0; base < cfg.max_trials; base += workers) {
    const std::size_t end = std::min(cfg.max_trials, base + workers);
    if (workers == 1) {
      if (auto r = trial(base)) return r;
      continue;
    }
    std::vector<std::future<std::optional<Result>>> wave;
    for (std::size_t t = base; t < end; ++t) wave.push_back(std::async(std::launch::async, trial, t));
    std::vector<std::optional<Result>> results;
    for (auto& f : wave) results.push_back(f.get());
    for (auto& r : results)
      if (r) return r;
  }
  return std::nullopt;
}

std::optional<BinaryAction> trial_action(const SearchConfig& cfg, std::size_t t) {
  SearchConfig sub = cfg;
  sub.seed = trial_engine(cfg.seed, t + 1)();
  try {
    return random_binary_action(sub);
  } catch (const Error& e) {
    if (e.code() == Errc::TrialsExhausted) return std::nullopt;
    throw;
  }
}

bool is_nondistributive_witness(const BinaryAction& a, const Witness& w) {
  const Elem g = w[0], h = w[1];
  const Point x = w[2], x1 = w[3], x2 = w[4];
  return a(g, a(h, x, x1), a(h, x, x2)) != a(h, x, a(g, x1, x2));
}

}  // namespace

NondistributiveWitness find_nondistributive_witness(const SearchConfig& cfg) {
  auto found = first_success<NondistributiveWitness>(cfg, [&](std::size_t t) -> std::optional<NondistributiveWitness> {
    auto a = trial_action(cfg, t);
    if (!a) return std::nullopt;
    Verdict v = is_distributive(*a);
    if (v) return std::nullopt;
    return NondistributiveWitness{std::move(*a), std::move(*v.witness), t};
  });
  if (!found) throw Error(Errc::TrialsExhausted, "every sampled action was distributive", {cfg.max_trials});
  if (!is_nondistributive_witness(found->action, found->tuple))
    throw std::logic_error("distributivity witness failed to re-verify");
  return std::move(*found);
}

std::optional<std::pair<Point, Point>> overlapping_orbits(const BinaryAction& a) {
  const std::size_t n = a.carrier_size();
  std::vector<SubsetOfCarrier> orbits;
  for (Point x = 0; x < n; ++x) orbits.push_back(orbit(a, x));
  for (Point x = 0; x < n; ++x)
    for (Point y = 0; y < n; ++y) {
      const SubsetOfCarrier common = intersect(orbits[x], orbits[y]);
      if (!common.empty() && common != orbits[x]) return std::pair{x, y};
    }
  return std::nullopt;
}

OverlapWitness find_overlapping_orbits_witness(const SearchConfig& cfg) {
  auto found = first_success<OverlapWitness>(cfg, [&](std::size_t t) -> std::optional<OverlapWitness> {
    auto a = trial_action(cfg, t);
    if (!a) return std::nullopt;
    auto pair = overlapping_orbits(*a);
    if (!pair) return std::nullopt;
    return OverlapWitness{std::move(*a), pair->first, pair->second, t};
  });
  if (!found) throw Error(Errc::TrialsExhausted, "no sampled action had overlapping orbits", {cfg.max_trials});

  // Re-derive both orbits from scratch before reporting.
  const SubsetOfCarrier ox = orbit(found->action, found->x);
  const SubsetOfCarrier oy = orbit(found->action, found->y);
  const SubsetOfCarrier common = intersect(ox, oy);
  if (common.empty() || common == ox) throw std::logic_error("orbit overlap witness failed to re-verify");
  return std::move(*found);
}

}  // namespace bispace
