#include "bispace/extension.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace bispace {

namespace {

void require_same_group(const ActionPtr& source, const ActionPtr& target) {
  if (!source || !target) throw Error(Errc::Malformed, "map needs both a source and a target action");
  if (!(source->group() == target->group()))
    throw Error(Errc::GroupMismatch, "source and target are actions of different groups");
}

}  // namespace

PartialEquivariantMap::PartialEquivariantMap(ActionPtr source, ActionPtr target, SubsetOfCarrier domain,
                                             std::vector<Point> values)
    : source_(std::move(source)), target_(std::move(target)), domain_(std::move(domain)), values_(std::move(values)) {
  require_same_group(source_, target_);
  if (domain_.carrier_size() != source_->carrier_size())
    throw Error(Errc::CarrierMismatch, "domain is not a subset of the source carrier");
  if (values_.size() != domain_.size()) throw Error(Errc::Malformed, "one value per domain point is required");
  for (Point y : values_)
    if (y >= target_->carrier_size()) throw Error(Errc::IndexOutOfRange, "value outside target carrier", {y});
}

PartialEquivariantMap PartialEquivariantMap::from_pairs(ActionPtr source, ActionPtr target,
                                                        const std::vector<std::pair<Point, Point>>& pairs) {
  std::map<Point, Point> graph;
  for (auto [a, y] : pairs) {
    if (auto [it, inserted] = graph.emplace(a, y); !inserted && it->second != y)
      throw Error(Errc::Malformed, "point mapped to two values", {a, it->second, y});
  }
  std::vector<Point> dom;
  std::vector<Point> vals;
  for (auto [a, y] : graph) {
    dom.push_back(a);
    vals.push_back(y);
  }
  const std::size_t n = source ? source->carrier_size() : 0;
  return PartialEquivariantMap(std::move(source), std::move(target), SubsetOfCarrier(n, std::move(dom)),
                               std::move(vals));
}

Point PartialEquivariantMap::operator()(Point a) const {
  auto it = std::lower_bound(domain_.begin(), domain_.end(), a);
  if (it == domain_.end() || *it != a) throw Error(Errc::IndexOutOfRange, "point outside the map's domain", {a});
  return values_[static_cast<std::size_t>(it - domain_.begin())];
}

std::vector<std::pair<Point, Point>> PartialEquivariantMap::pairs() const {
  std::vector<std::pair<Point, Point>> out;
  for (std::size_t i = 0; i < values_.size(); ++i) out.emplace_back(domain_.members()[i], values_[i]);
  return out;
}

TotalEquivariantMap::TotalEquivariantMap(ActionPtr source, ActionPtr target, std::vector<Point> values)
    : TotalEquivariantMap(source, std::move(target), SubsetOfCarrier::full(source ? source->carrier_size() : 0),
                          std::move(values)) {}

TotalEquivariantMap::TotalEquivariantMap(ActionPtr source, ActionPtr target, SubsetOfCarrier domain,
                                         std::vector<Point> values)
    : source_(std::move(source)), target_(std::move(target)), domain_(std::move(domain)), values_(std::move(values)) {
  require_same_group(source_, target_);
  const std::size_t n = source_->carrier_size();
  if (domain_.carrier_size() != n || values_.size() != n)
    throw Error(Errc::CarrierMismatch, "map table must cover the source carrier");
  for (Point x = 0; x < n; ++x) {
    const bool defined = domain_.contains(x);
    if (defined && values_[x] >= target_->carrier_size())
      throw Error(Errc::IndexOutOfRange, "value outside target carrier", {x, values_[x]});
    if (!defined && values_[x] != undefined)
      throw Error(Errc::Malformed, "value given outside the map's domain", {x});
  }
}

Verdict is_biequivariant(const TotalEquivariantMap& f) {
  const BinaryAction& X = f.source();
  const BinaryAction& Y = f.target();
  const std::size_t m = X.group().order();
  for (Elem g = 0; g < m; ++g)
    for (Point x1 : f.domain())
      for (Point x2 : f.domain()) {
        const Point x = X(g, x1, x2);
        if (!f.domain().contains(x) || f(x) != Y(g, f(x1), f(x2))) return Verdict::fail({g, x1, x2});
      }
  return Verdict::pass();
}

Verdict certify(TotalEquivariantMap& f) {
  Verdict v = is_biequivariant(f);
  f.certified_ = v.holds();
  return v;
}

PartialEquivariantMap restrict_to(const TotalEquivariantMap& f, const SubsetOfCarrier& A) {
  std::vector<Point> vals;
  for (Point a : A) {
    if (!f.domain().contains(a)) throw Error(Errc::IndexOutOfRange, "restriction outside the map's domain", {a});
    vals.push_back(f(a));
  }
  return PartialEquivariantMap(f.source_ptr(), f.target_ptr(), A, std::move(vals));
}

Verdict check_sm1(const PartialEquivariantMap& f) {
  const BinaryAction& X = f.source();
  const BinaryAction& Y = f.target();
  const std::size_t m = X.group().order();
  for (Elem g = 0; g < m; ++g)
    for (Point a1 : f.domain())
      for (Point a2 : f.domain()) {
        const Point x = X(g, a1, a2);
        if (f.domain().contains(x) && f(x) != Y(g, f(a1), f(a2))) return Verdict::fail({g, a1, a2});
      }
  return Verdict::pass();
}

namespace {

class Propagation {
 public:
  explicit Propagation(const PartialEquivariantMap& f)
      : X_(f.source()), Y_(f.target()), label_(X_.carrier_size(), TotalEquivariantMap::undefined),
        origin_(X_.carrier_size()) {
    for (auto [a, y] : f.pairs()) {
      label_[a] = y;
      labeled_.push_back(a);
      work_.push_back(a);
    }
  }

  std::optional<ExtensionConflict> run() {
    const std::size_t m = X_.group().order();
    while (!work_.empty()) {
      const Point x = work_.front();
      work_.pop_front();
      // labeled_ grows while we scan it; new points are queued and will
      // pair with x when they are popped themselves.
      const std::size_t known = labeled_.size();
      for (std::size_t i = 0; i < known; ++i) {
        const Point y = labeled_[i];
        for (Elem g = 0; g < m; ++g) {
          if (auto c = derive(g, x, y)) return c;
          if (y != x)
            if (auto c = derive(g, y, x)) return c;
        }
      }
    }
    return std::nullopt;
  }

  std::vector<Point> labels() const { return label_; }
  std::vector<Point> labeled() const { return labeled_; }

 private:
  std::optional<ExtensionConflict> derive(Elem g, Point u, Point v) {
    const Point w = X_(g, u, v);
    const Point label = Y_(g, label_[u], label_[v]);
    if (label_[w] == TotalEquivariantMap::undefined) {
      label_[w] = label;
      origin_[w] = DerivationStep{g, u, v, w};
      labeled_.push_back(w);
      work_.push_back(w);
      return std::nullopt;
    }
    if (label_[w] == label) return std::nullopt;

    ExtensionConflict c{ExtensionConflict::Kind::Conflict, w, label_[w], label, derivation_of({w}), {}};
    c.second = derivation_of({u, v});
    c.second.push_back(DerivationStep{g, u, v, w});
    return c;
  }

  Derivation derivation_of(const std::vector<Point>& roots) const {
    Derivation out;
    std::vector<bool> done(label_.size(), false);
    // Iterative post-order over the origin tree.
    std::vector<std::pair<Point, bool>> stack;
    for (auto it = roots.rbegin(); it != roots.rend(); ++it) stack.emplace_back(*it, false);
    while (!stack.empty()) {
      auto [x, expanded] = stack.back();
      stack.pop_back();
      if (done[x] || !origin_[x]) continue;
      if (expanded) {
        done[x] = true;
        out.push_back(*origin_[x]);
        continue;
      }
      stack.emplace_back(x, true);
      stack.emplace_back(origin_[x]->x2, false);
      stack.emplace_back(origin_[x]->x1, false);
    }
    return out;
  }

  const BinaryAction& X_;
  const BinaryAction& Y_;
  std::vector<Point> label_;
  std::vector<std::optional<DerivationStep>> origin_;
  std::vector<Point> labeled_;
  std::deque<Point> work_;
};

}  // namespace

StructuralExtension extend_structural(const PartialEquivariantMap& f) {
  if (f.domain().empty()) throw Error(Errc::EmptyInput, "cannot extend a map with empty domain");
  if (auto v = check_sm1(f); !v) {
    const Witness& w = *v.witness;
    const Elem g = w[0];
    const Point a1 = w[1], a2 = w[2];
    const Point x = f.source()(g, a1, a2);
    return ExtensionConflict{ExtensionConflict::Kind::Sm1Violation,
                             x,
                             f(x),
                             f.target()(g, f(a1), f(a2)),
                             {},
                             {DerivationStep{g, a1, a2, x}}};
  }

  Propagation prop(f);
  if (auto conflict = prop.run()) return *conflict;

  const std::size_t n = f.source().carrier_size();
  TotalEquivariantMap out(f.source_ptr(), f.target_ptr(), SubsetOfCarrier(n, prop.labeled()), prop.labels());
  if (auto v = certify(out); !v)
    throw std::logic_error("conflict-free propagation produced a non-equivariant map " + format_witness(*v.witness));
  return out;
}

Verdict check_sm2_bounded(const PartialEquivariantMap& f, std::size_t max_depth, std::size_t budget) {
  if (max_depth == 0) throw Error(Errc::Malformed, "bracket depth must be at least 1");
  const BinaryAction& X = f.source();
  const BinaryAction& Y = f.target();
  const std::size_t m = X.group().order();
  const std::size_t ny = Y.carrier_size();

  // layer holds every (value, relabeled value) pair realized at the current
  // depth; depth 0 is the graph of f itself.
  std::vector<std::pair<Point, Point>> layer = f.pairs();
  std::size_t spent = 0;
  for (std::size_t depth = 1; depth <= max_depth; ++depth) {
    const std::size_t cost = m * layer.size() * layer.size();
    if (cost > budget - std::min(budget, spent))
      throw Error(Errc::BudgetExceeded, "bracket enumeration exceeds budget", {depth, spent + cost});
    spent += cost;

    std::vector<bool> seen(X.carrier_size() * ny, false);
    std::vector<std::pair<Point, Point>> next;
    for (Elem g = 0; g < m; ++g)
      for (auto [x1, y1] : layer)
        for (auto [x2, y2] : layer) {
          const Point x = X(g, x1, x2);
          const Point y = Y(g, y1, y2);
          if (!seen[x * ny + y]) {
            seen[x * ny + y] = true;
            next.emplace_back(x, y);
          }
        }
    std::sort(next.begin(), next.end());
    for (std::size_t i = 1; i < next.size(); ++i)
      if (next[i].first == next[i - 1].first)
        return Verdict::fail({next[i].first, next[i - 1].second, next[i].second});
    layer = std::move(next);
  }
  return Verdict::pass();
}

IsotropySubgroup isotropy_group(const BinaryAction& a, Point x, Point xp) {
  if (x >= a.carrier_size() || xp >= a.carrier_size())
    throw Error(Errc::IndexOutOfRange, "isotropy pair outside carrier", {x, xp});
  IsotropySubgroup out{x, xp, {}};
  for (Elem g = 0; g < a.group().order(); ++g)
    if (a(g, x, xp) == xp) out.members.push_back(g);
  if (!is_subgroup(a.group(), out.members))
    throw std::logic_error("isotropy set is not a subgroup for pair " + format_witness({x, xp}));
  return out;
}

namespace {

/// For each section point a and carrier point x: all g with g(a, a) = x, ascending.
using DiagonalReps = std::vector<std::vector<std::vector<Elem>>>;

DiagonalReps diagonal_representations(const BinaryAction& X, const CrossSection& sigma) {
  const std::size_t n = X.carrier_size();
  DiagonalReps reps(sigma.chosen().size(), std::vector<std::vector<Elem>>(n));
  for (std::size_t k = 0; k < sigma.chosen().size(); ++k)
    for (Elem g = 0; g < X.group().order(); ++g) reps[k][X(g, sigma(k), sigma(k))].push_back(g);
  return reps;
}

CrossSection domain_section(const PartialEquivariantMap& f) {
  const OrbitPartition p = orbit_partition(f.source_ptr());
  return section_from_transversal(p, f.domain());
}

}  // namespace

Verdict check_star_condition(const PartialEquivariantMap& f) {
  const CrossSection sigma = domain_section(f);
  const BinaryAction& X = f.source();
  const BinaryAction& Y = f.target();
  const std::size_t m = X.group().order();
  const DiagonalReps reps = diagonal_representations(X, sigma);

  for (Point a1 : f.domain()) {
    const Point b1 = f(a1);
    for (Point a2 : f.domain()) {
      const Point b2 = f(a2);
      for (Elem h = 0; h < m; ++h)
        for (Elem k = 0; k < m; ++k)
          for (Elem s = 0; s < m; ++s) {
            const Point x = X(h, X(k, a1, a1), X(s, a2, a2));
            const Point y = Y(h, Y(k, b1, b1), Y(s, b2, b2));
            const std::size_t orbit_id = project(sigma.partition(), x);
            const Point a = sigma(orbit_id);
            const Point b = f(a);
            for (Elem g : reps[orbit_id][x])
              if (Y(g, b, b) != y) return Verdict::fail({g, h, k, s, a, a1, a2});
          }
    }
  }
  return Verdict::pass();
}

TotalEquivariantMap extend_from_section(const PartialEquivariantMap& f) {
  if (auto v = is_distributive(f.target()); !v)
    throw Error(Errc::NotDistributive, "target action is not distributive", *v.witness);
  const CrossSection sigma = domain_section(f);
  if (auto v = check_star_condition(f); !v)
    throw Error(Errc::StarConditionFailed, "map violates condition (*)", *v.witness);

  const BinaryAction& X = f.source();
  const BinaryAction& Y = f.target();
  const std::size_t n = X.carrier_size();
  const DiagonalReps reps = diagonal_representations(X, sigma);
  std::vector<Point> values(n);
  for (Point x = 0; x < n; ++x) {
    const std::size_t orbit_id = project(sigma.partition(), x);
    const auto& candidates = reps[orbit_id][x];
    if (candidates.empty()) throw Error(Errc::NoRepresentation, "no g with g(a,a) = x", {x, sigma(orbit_id)});
    const Point b = f(sigma(orbit_id));
    values[x] = Y(candidates.front(), b, b);
  }

  TotalEquivariantMap out(f.source_ptr(), f.target_ptr(), std::move(values));
  if (auto v = certify(out); !v)
    throw std::logic_error("section extension is not bi-equivariant " + format_witness(*v.witness));
  return out;
}

Verdict check_isotropy_condition(const PartialEquivariantMap& f) {
  const BinaryAction& X = f.source();
  const BinaryAction& Y = f.target();
  for (Point a1 : f.domain())
    for (Point a2 : f.domain()) {
      const Point b1 = f(a1), b2 = f(a2);
      for (Elem g = 0; g < X.group().order(); ++g)
        if (X(g, a1, a2) == a2 && Y(g, b1, b2) != b2) return Verdict::fail({a1, a2, g});
    }
  return Verdict::pass();
}

}  // namespace bispace
