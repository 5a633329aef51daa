#include <gtest/gtest.h>

#include <map>

#include "bispace/extension.hpp"
#include "test_support.hpp"

using namespace bispace;
using namespace bispace::testing;

namespace {

ActionPtr self(GroupPtr G, SelfActionVariant v = SelfActionVariant::Distributive) {
  return share(canonical_self_action(std::move(G), v));
}

GroupPtr Z(std::size_t k) { return share(FiniteGroup::cyclic(k)); }

TotalEquivariantMap identity_map(const ActionPtr& a) {
  std::vector<Point> v(a->carrier_size());
  std::iota(v.begin(), v.end(), Point{0});
  return TotalEquivariantMap(a, a, v);
}

const TotalEquivariantMap& success(const StructuralExtension& r) {
  if (const auto* c = std::get_if<ExtensionConflict>(&r))
    ADD_FAILURE() << "unexpected conflict at point " << c->point;
  return std::get<TotalEquivariantMap>(r);
}

// Actions over one group: both self-actions, trivial actions, random ones.
std::vector<ActionPtr> actions_over(const GroupPtr& G, std::uint64_t seed, std::size_t randoms = 4) {
  std::vector<ActionPtr> out{self(G), self(G, SelfActionVariant::Conjugate), trivial_action(G, 1),
                             trivial_action(G, 2), trivial_action(G, 3)};
  Sampler pick(seed);
  for (std::size_t i = 0; i < randoms; ++i)
    out.push_back(share(random_binary_action(config(G, 1 + pick.below(3), seed * 101 + i))));
  return out;
}

std::vector<ActionPtr> distributive_over(const GroupPtr& G, std::uint64_t seed, std::size_t randoms = 4) {
  std::vector<ActionPtr> out;
  for (auto& a : actions_over(G, seed, 0))
    if (distributive_by_definition(*a)) out.push_back(a);
  for (std::size_t i = 0; i < randoms; ++i) out.push_back(random_distributive_action(G, 3, seed * 31 + i));
  return out;
}

bool small_enough(const BinaryAction& X, const BinaryAction& Y) {
  double count = 1;
  for (std::size_t i = 0; i < X.carrier_size(); ++i) count *= static_cast<double>(Y.carrier_size());
  return count <= 5000;
}

std::vector<Point> random_values(Sampler& rng, std::size_t count, std::size_t ny) {
  std::vector<Point> v(count);
  for (auto& y : v) y = rng.below(ny);
  return v;
}

PartialEquivariantMap random_partial(Sampler& rng, const ActionPtr& X, const ActionPtr& Y) {
  auto A = rng.nonempty_subset(X->carrier_size());
  auto vals = random_values(rng, A.size(), Y->carrier_size());
  return PartialEquivariantMap(X, Y, A, vals);
}

// Replays a derivation from the seed labels and returns the label it gives
// its final point; also checks each step against the source action.
Point replay(const PartialEquivariantMap& f, const Derivation& d, Point point) {
  std::map<Point, Point> label;
  for (auto [a, y] : f.pairs()) label[a] = y;
  if (d.empty()) {
    EXPECT_TRUE(f.domain().contains(point));
    return f(point);
  }
  for (const auto& s : d) {
    EXPECT_EQ(f.source()(s.g, s.x1, s.x2), s.result);
    EXPECT_TRUE(label.count(s.x1) && label.count(s.x2)) << "step uses an unlabeled point";
    label[s.result] = f.target()(s.g, label[s.x1], label[s.x2]);
  }
  EXPECT_EQ(d.back().result, point);
  return label[point];
}

}  // namespace

// ---- construction ----

TEST(PartialEquivariantMap, GroupMismatch) {
  try {
    PartialEquivariantMap(self(Z(2)), self(Z(3)), SubsetOfCarrier(2, {0}), {0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::GroupMismatch);
  }
  EXPECT_THROW(TotalEquivariantMap(self(Z(3)), trivial_action(Z(2), 2), {0, 0, 0}), Error);
}

TEST(PartialEquivariantMap, FromPairs) {
  auto X = self(Z(3));
  auto f = PartialEquivariantMap::from_pairs(X, X, {{2, 1}, {0, 0}, {2, 1}});
  EXPECT_EQ(f.domain(), SubsetOfCarrier(3, {0, 2}));
  EXPECT_EQ(f(2), 1u);
  EXPECT_THROW(f(1), Error);
  EXPECT_THROW(PartialEquivariantMap::from_pairs(X, X, {{0, 0}, {0, 1}}), Error);
  EXPECT_THROW(PartialEquivariantMap::from_pairs(X, X, {{0, 3}}), Error);
}

// ---- is_biequivariant ----

TEST(IsBiequivariant, IdentityMaps) {
  for (const auto& a : action_corpus()) {
    auto id = identity_map(a);
    EXPECT_TRUE(is_biequivariant(id).holds());
    EXPECT_FALSE(id.certified());
    EXPECT_TRUE(certify(id).holds());
    EXPECT_TRUE(id.certified());
  }
}

TEST(IsBiequivariant, ConstantIntoTrivial) {
  for (const auto& [name, G] : six_groups()) {
    auto X = self(G);
    auto Y = trivial_action(G, 3);
    for (Point y0 = 0; y0 < 3; ++y0)
      EXPECT_TRUE(is_biequivariant(TotalEquivariantMap(X, Y, std::vector<Point>(X->carrier_size(), y0))).holds())
          << name;
  }
}

TEST(IsBiequivariant, RandomMapFailsWithVerifiedWitness) {
  auto X = self(share(FiniteGroup::symmetric(3)));
  Sampler rng(3);
  for (int t = 0; t < 100; ++t) {
    TotalEquivariantMap f(X, X, random_values(rng, 6, 6));
    auto v = is_biequivariant(f);
    if (v) continue;
    const auto& w = *v.witness;
    ASSERT_EQ(w.size(), 3u);
    EXPECT_NE(f((*X)(w[0], w[1], w[2])), (*X)(w[0], f(w[1]), f(w[2])));
    EXPECT_FALSE(certify(f).holds());
    EXPECT_FALSE(f.certified());
    return;
  }
  FAIL() << "no non-equivariant map sampled";
}

TEST(IsBiequivariant, AgreesWithBruteForceEnumeration) {
  for (const auto& [name, G] : six_groups()) {
    if (G->order() > 4) continue;
    auto acts = actions_over(G, G->order(), 2);
    for (const auto& X : acts)
      for (const auto& Y : acts) {
        if (!small_enough(*X, *Y)) continue;
        const auto good = all_biequivariant_tables(*X, *Y, 100000);
        std::size_t count = 0;
        std::vector<Point> f(X->carrier_size(), 0);
        for (;;) {
          count += is_biequivariant(TotalEquivariantMap(X, Y, f)).holds();
          std::size_t i = 0;
          while (i < f.size() && ++f[i] == Y->carrier_size()) f[i++] = 0;
          if (i == f.size()) break;
        }
        EXPECT_EQ(count, good.size()) << name;
      }
  }
}

// ---- check_sm1 ----

TEST(CheckSm1, Examples) {
  auto X = self(Z(3));
  EXPECT_TRUE(check_sm1(PartialEquivariantMap(X, X, SubsetOfCarrier(3, {1}), {2})).holds());

  auto T = trivial_action(Z(3), 3);
  Sampler rng(5);
  for (int t = 0; t < 20; ++t) EXPECT_TRUE(check_sm1(random_partial(rng, T, T)).holds());
}

TEST(CheckSm1, ViolationWitnessVerifies) {
  auto X = self(Z(3));
  auto Y = trivial_action(Z(3), 2);
  auto f = PartialEquivariantMap(X, Y, SubsetOfCarrier(3, {0, 1}), {0, 1});
  auto v = check_sm1(f);
  ASSERT_FALSE(v.holds());
  const auto& w = *v.witness;
  const Point x = (*X)(w[0], w[1], w[2]);
  ASSERT_TRUE(f.domain().contains(x));
  EXPECT_NE(f(x), (*Y)(w[0], f(w[1]), f(w[2])));
}

TEST(CheckSm1, RestrictionsOfBiequivariantMapsPass) {
  Sampler rng(17);
  for (const auto& [name, G] : six_groups()) {
    auto acts = actions_over(G, 40 + G->order(), 2);
    for (const auto& X : acts)
      for (const auto& Y : acts) {
        if (!small_enough(*X, *Y)) continue;
        for (const auto& F : all_biequivariant_tables(*X, *Y, 8)) {
          TotalEquivariantMap full(X, Y, F);
          EXPECT_TRUE(check_sm1(restrict_to(full, rng.nonempty_subset(X->carrier_size()))).holds()) << name;
        }
      }
  }
}

// ---- extend_structural ----

TEST(ExtendStructural, BiInvariantDomainIsFixpoint) {
  auto X = self(Z(4));
  auto id = identity_map(X);
  auto r = success(extend_structural(restrict_to(id, SubsetOfCarrier::full(4))));
  EXPECT_EQ(r, id);
  EXPECT_TRUE(r.certified());
}

TEST(ExtendStructural, Z3FromZeroIsIdentity) {
  auto X = self(Z(3));
  auto r = success(extend_structural(PartialEquivariantMap(X, X, SubsetOfCarrier(3, {0}), {0})));
  EXPECT_EQ(r.values(), (std::vector<Point>{0, 1, 2}));
  EXPECT_TRUE(r.certified());
}

TEST(ExtendStructural, Z3IntoTrivialIsConstant) {
  auto X = self(Z(3));
  auto Y = trivial_action(Z(3), 2);
  auto r = success(extend_structural(PartialEquivariantMap(X, Y, SubsetOfCarrier(3, {0}), {0})));
  EXPECT_EQ(r.values(), (std::vector<Point>{0, 0, 0}));
  EXPECT_TRUE(r.certified());
}

TEST(ExtendStructural, DomainIsSaturation) {
  auto T = trivial_action(Z(2), 4);
  auto r = success(extend_structural(PartialEquivariantMap(T, T, SubsetOfCarrier(4, {1, 3}), {0, 2})));
  EXPECT_EQ(r.domain(), SubsetOfCarrier(4, {1, 3}));
  EXPECT_EQ(r(0), TotalEquivariantMap::undefined);
  EXPECT_EQ(r(1), 0u);
  EXPECT_EQ(r(3), 2u);
}

TEST(ExtendStructural, Sm1ViolationIsReported) {
  auto X = self(Z(3));
  auto Y = trivial_action(Z(3), 2);
  auto r = extend_structural(PartialEquivariantMap(X, Y, SubsetOfCarrier(3, {0, 1}), {0, 1}));
  ASSERT_TRUE(std::holds_alternative<ExtensionConflict>(r));
  EXPECT_EQ(std::get<ExtensionConflict>(r).kind, ExtensionConflict::Kind::Sm1Violation);
}

TEST(ExtendStructural, ConflictsCarryReplayableDerivations) {
  Sampler rng(23);
  std::size_t conflicts = 0;
  for (std::uint64_t s = 0; s < 300; ++s) {
    auto X = random_action(s, 4);
    auto Y = random_action(s + 7777, 3);
    if (!(X->group() == Y->group())) continue;
    auto f = random_partial(rng, X, Y);
    auto r = extend_structural(f);
    const auto* c = std::get_if<ExtensionConflict>(&r);
    if (!c) continue;
    EXPECT_NE(c->first_label, c->second_label);
    if (c->kind == ExtensionConflict::Kind::Sm1Violation) {
      EXPECT_FALSE(check_sm1(f).holds());
      continue;
    }
    ++conflicts;
    EXPECT_TRUE(check_sm1(f).holds());
    EXPECT_EQ(replay(f, c->first, c->point), c->first_label);
    EXPECT_EQ(replay(f, c->second, c->point), c->second_label);
  }
  EXPECT_GT(conflicts, 0u);
}

TEST(ExtendStructural, RestrictionRoundTrip) {
  Sampler rng(29);
  std::size_t checked = 0;
  for (const auto& [name, G] : six_groups()) {
    auto acts = actions_over(G, 60 + G->order(), 3);
    for (const auto& X : acts)
      for (const auto& Y : acts) {
        if (!small_enough(*X, *Y)) continue;
        for (const auto& F : all_biequivariant_tables(*X, *Y, 6)) {
          TotalEquivariantMap full(X, Y, F);
          for (int t = 0; t < 3; ++t) {
            const auto A = rng.nonempty_subset(X->carrier_size());
            const auto r = success(extend_structural(restrict_to(full, A)));
            EXPECT_TRUE(r.certified());
            EXPECT_EQ(r.domain(), saturate(*X, A).set);
            for (Point x : r.domain()) EXPECT_EQ(r(x), F[x]) << name;
            ++checked;
          }
        }
      }
  }
  EXPECT_GT(checked, 100u);
}

TEST(ExtendStructural, UniqueAgainstBruteForce) {
  // Every total bi-equivariant map agreeing with f on A agrees with the
  // extension on the saturation of A.
  Sampler rng(31);
  for (const auto& [name, G] : six_groups()) {
    auto acts = actions_over(G, 80 + G->order(), 2);
    for (const auto& X : acts)
      for (const auto& Y : acts) {
        if (!small_enough(*X, *Y)) continue;
        const auto all = all_biequivariant_tables(*X, *Y, 100000);
        for (const auto& F : all) {
          const auto A = rng.nonempty_subset(X->carrier_size());
          const auto r = success(extend_structural(restrict_to(TotalEquivariantMap(X, Y, F), A)));
          for (const auto& H : all) {
            if (!std::all_of(A.begin(), A.end(), [&](Point a) { return H[a] == F[a]; })) continue;
            for (Point x : r.domain()) EXPECT_EQ(H[x], r(x)) << name;
          }
        }
      }
  }
}

TEST(ExtendStructural, PerturbedExtensionFailsCertification) {
  Sampler rng(37);
  std::size_t perturbed = 0;
  for (const auto& [name, G] : six_groups()) {
    auto acts = actions_over(G, 90 + G->order(), 2);
    for (const auto& X : acts)
      for (const auto& Y : acts) {
        if (Y->carrier_size() < 2 || !small_enough(*X, *Y)) continue;
        for (const auto& F : all_biequivariant_tables(*X, *Y, 4)) {
          const auto A = rng.nonempty_subset(X->carrier_size());
          const auto r = success(extend_structural(restrict_to(TotalEquivariantMap(X, Y, F), A)));
          for (Point x : r.domain()) {
            if (A.contains(x)) continue;
            for (Point y = 0; y < Y->carrier_size(); ++y) {
              if (y == r(x)) continue;
              auto vals = r.values();
              vals[x] = y;
              TotalEquivariantMap bad(X, Y, r.domain(), vals);
              EXPECT_FALSE(certify(bad).holds()) << name;
              ++perturbed;
            }
          }
        }
      }
  }
  EXPECT_GT(perturbed, 20u);
}

TEST(ExtendStructural, EmptyDomainRejected) {
  auto X = self(Z(2));
  EXPECT_THROW(extend_structural(PartialEquivariantMap(X, X, SubsetOfCarrier(2, {}), {})), Error);
}

// ---- check_sm2_bounded ----

TEST(CheckSm2Bounded, Examples) {
  auto T = trivial_action(Z(2), 2);
  EXPECT_TRUE(check_sm2_bounded(PartialEquivariantMap(T, T, SubsetOfCarrier(2, {1}), {0}), 1).holds());

  auto X = self(Z(3));
  auto id = identity_map(X);
  for (std::size_t d = 1; d <= 4; ++d)
    EXPECT_TRUE(check_sm2_bounded(restrict_to(id, SubsetOfCarrier::full(3)), d).holds());

  EXPECT_THROW(check_sm2_bounded(restrict_to(id, SubsetOfCarrier(3, {0})), 0), Error);
}

TEST(CheckSm2Bounded, BudgetExceeded) {
  auto X = self(share(FiniteGroup::symmetric(3)));
  auto f = restrict_to(identity_map(X), SubsetOfCarrier::full(6));
  try {
    check_sm2_bounded(f, 3, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BudgetExceeded);
  }
}

TEST(CheckSm2Bounded, EquivalentToPropagationAtSaturationDepth) {
  Sampler rng(41);
  std::size_t failures = 0, successes = 0;
  for (const auto& [name, G] : six_groups()) {
    if (G->order() > 4) continue;
    for (std::uint64_t s = 0; s < 40; ++s) {
      auto X = share(random_binary_action(config(G, 1 + rng.below(3), 500 + s)));
      auto Y = share(random_binary_action(config(G, 1 + rng.below(3), 900 + s)));
      auto f = random_partial(rng, X, Y);
      const std::size_t depth = saturate(*X, f.domain()).depth;
      const bool propagated = std::holds_alternative<TotalEquivariantMap>(extend_structural(f));
      const auto oracle = check_sm2_bounded(f, depth);
      EXPECT_EQ(propagated, oracle.holds()) << name << " seed " << s;
      (propagated ? successes : failures)++;
      if (!oracle) {
        const auto& w = *oracle.witness;
        EXPECT_NE(w[1], w[2]);
      }
    }
  }
  EXPECT_GT(failures, 0u);
  EXPECT_GT(successes, 0u);
}

// ---- isotropy ----

TEST(IsotropyGroup, Examples) {
  for (const auto& [name, G] : six_groups()) {
    auto T = trivial_action(G, 2);
    EXPECT_EQ(isotropy_group(*T, 0, 1).members, all_elements(*G)) << name;
    auto X = self(G);
    for (Point x = 0; x < G->order(); ++x)
      for (Point xp = 0; xp < G->order(); ++xp) EXPECT_EQ(isotropy_group(*X, x, xp).members, ElemSet{G->identity()});
  }
  auto two = two_orbit_action();
  for (Point x = 0; x < 3; ++x) EXPECT_EQ(isotropy_group(*two, x, 2).members, (ElemSet{0, 1}));
  EXPECT_EQ(isotropy_group(*two, 2, 0).members, (ElemSet{0}));
}

TEST(IsotropyGroup, ConjugationIdentity) {
  for (const auto& a : action_corpus()) {
    const auto& G = a->group();
    for (Point x = 0; x < a->carrier_size(); ++x)
      for (Point xp = 0; xp < a->carrier_size(); ++xp) {
        const auto H = isotropy_group(*a, x, xp).members;
        for (Elem g = 0; g < G.order(); ++g)
          EXPECT_EQ(isotropy_group(*a, x, (*a)(g, x, xp)).members, conjugate_subgroup(G, g, H));
      }
  }
}

TEST(CheckIsotropyCondition, Examples) {
  Sampler rng(43);
  for (const auto& [name, G] : six_groups()) {
    auto X = self(G, SelfActionVariant::Conjugate);
    auto T = trivial_action(G, 3);
    for (int t = 0; t < 5; ++t) EXPECT_TRUE(check_isotropy_condition(random_partial(rng, X, T)).holds()) << name;
    if (G->order() == 1) continue;
    auto v = check_isotropy_condition(random_partial(rng, T, self(G)));
    ASSERT_FALSE(v.holds()) << name;
    const auto& w = *v.witness;
    EXPECT_NE(w[2], G->identity());
  }
}

TEST(CheckIsotropyCondition, NecessaryForBiequivariance) {
  Sampler rng(47);
  for (const auto& [name, G] : six_groups()) {
    auto acts = actions_over(G, 120 + G->order(), 3);
    for (const auto& X : acts)
      for (const auto& Y : acts) {
        if (!small_enough(*X, *Y)) continue;
        for (const auto& F : all_biequivariant_tables(*X, *Y, 8))
          for (int t = 0; t < 3; ++t)
            EXPECT_TRUE(check_isotropy_condition(restrict_to(TotalEquivariantMap(X, Y, F),
                                                             rng.nonempty_subset(X->carrier_size())))
                            .holds())
                << name;
      }
  }
}

// ---- condition (*) and the section engine ----

TEST(CheckStarCondition, Examples) {
  Sampler rng(53);
  auto T = trivial_action(Z(2), 3);
  for (int t = 0; t < 10; ++t)
    EXPECT_TRUE(check_star_condition(PartialEquivariantMap(T, T, SubsetOfCarrier::full(3), random_values(rng, 3, 3)))
                    .holds());

  auto X = self(Z(4));
  auto id = identity_map(X);
  for (Point a = 0; a < 4; ++a) EXPECT_TRUE(check_star_condition(restrict_to(id, SubsetOfCarrier(4, {a}))).holds());
}

TEST(CheckStarCondition, FailureWitnessVerifies) {
  // Z2 swapping {0,1} as source, the trivial action as target: mapping the
  // section point 0 of the two-orbit action is fine, but a map into the
  // Z2 self-action cannot send the fixed point 2 anywhere.
  auto X = two_orbit_action();
  auto Y = self(Z(2));
  auto f = PartialEquivariantMap(X, Y, SubsetOfCarrier(3, {0, 2}), {0, 1});
  auto v = check_star_condition(f);
  ASSERT_FALSE(v.holds());
  const auto& w = *v.witness;
  ASSERT_EQ(w.size(), 7u);
  const Elem g = w[0], h = w[1], k = w[2], s = w[3];
  const Point a = w[4], a1 = w[5], a2 = w[6];
  EXPECT_EQ((*X)(g, a, a), (*X)(h, (*X)(k, a1, a1), (*X)(s, a2, a2)));
  EXPECT_NE((*Y)(g, f(a), f(a)), (*Y)(h, (*Y)(k, f(a1), f(a1)), (*Y)(s, f(a2), f(a2))));
  try {
    extend_from_section(f);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::StarConditionFailed);
  }
}

TEST(CheckStarCondition, Preconditions) {
  auto S3c = self(share(FiniteGroup::symmetric(3)), SelfActionVariant::Conjugate);
  try {
    check_star_condition(PartialEquivariantMap(S3c, S3c, SubsetOfCarrier(6, {0}), {0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotDistributive);
  }
  auto X = self(Z(3));
  try {
    check_star_condition(PartialEquivariantMap(X, X, SubsetOfCarrier(3, {0, 1}), {0, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotATransversal);
  }
}

TEST(ExtendFromSection, Examples) {
  Sampler rng(59);
  auto T = trivial_action(Z(3), 3);
  for (int t = 0; t < 5; ++t) {
    auto vals = random_values(rng, 3, 3);
    auto r = extend_from_section(PartialEquivariantMap(T, T, SubsetOfCarrier::full(3), vals));
    EXPECT_EQ(r.values(), vals);
    EXPECT_TRUE(r.certified());
  }

  auto X = self(Z(3));
  auto id = extend_from_section(PartialEquivariantMap(X, X, SubsetOfCarrier(3, {0}), {0}));
  EXPECT_EQ(id.values(), (std::vector<Point>{0, 1, 2}));

  auto X4 = self(Z(4));
  auto T4 = trivial_action(Z(4), 3);
  auto c = extend_from_section(PartialEquivariantMap(X4, T4, SubsetOfCarrier(4, {0}), {2}));
  EXPECT_EQ(c.values(), (std::vector<Point>{2, 2, 2, 2}));
  EXPECT_TRUE(c.certified());
}

TEST(ExtendFromSection, RequiresDistributiveTarget) {
  auto G = share(FiniteGroup::symmetric(3));
  auto T = trivial_action(G, 1);
  try {
    extend_from_section(PartialEquivariantMap(T, self(G, SelfActionVariant::Conjugate), SubsetOfCarrier(1, {0}), {0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotDistributive);
  }
}

TEST(ExtendFromSection, SectionRoundTrip) {
  std::size_t checked = 0;
  for (const auto& [name, G] : six_groups()) {
    auto acts = distributive_over(G, 200 + G->order());
    for (const auto& X : acts)
      for (const auto& Y : acts) {
        if (!small_enough(*X, *Y)) continue;
        const auto p = orbit_partition(X);
        for (const auto& F : all_biequivariant_tables(*X, *Y, 6)) {
          const TotalEquivariantMap full(X, Y, F);
          for (const auto& A : enumerate_transversals(p, 12)) {
            EXPECT_EQ(extend_from_section(restrict_to(full, A)), full) << name;
            ++checked;
          }
        }
      }
  }
  EXPECT_GT(checked, 100u);
}

TEST(ExtendFromSection, AgreesWithStructuralEngine) {
  Sampler rng(61);
  std::size_t agreed = 0, refused = 0;
  for (const auto& [name, G] : six_groups()) {
    auto acts = distributive_over(G, 300 + G->order());
    for (const auto& X : acts)
      for (const auto& Y : acts) {
        const auto p = orbit_partition(X);
        for (const auto& A : enumerate_transversals(p, 6))
          for (int t = 0; t < 3; ++t) {
            PartialEquivariantMap f(X, Y, A, random_values(rng, A.size(), Y->carrier_size()));
            const bool star = check_star_condition(f).holds();
            const auto structural = extend_structural(f);
            ASSERT_EQ(star, std::holds_alternative<TotalEquivariantMap>(structural)) << name;
            if (!star) {
              ++refused;
              continue;
            }
            EXPECT_EQ(extend_from_section(f), std::get<TotalEquivariantMap>(structural)) << name;
            ++agreed;
          }
      }
  }
  EXPECT_GT(agreed, 50u);
  EXPECT_GT(refused, 10u);
}

TEST(CheckIsotropyCondition, ImpliesStarWhenSourceHasOneOrbit) {
  Sampler rng(67);
  std::size_t implied = 0;
  for (const auto& [name, G] : six_groups()) {
    auto acts = distributive_over(G, 400 + G->order(), 8);
    for (const auto& X : acts) {
      const auto p = orbit_partition(X);
      if (p.orbit_count() != 1) continue;
      for (const auto& Y : acts)
        for (const auto& A : enumerate_transversals(p))
          for (Point y = 0; y < Y->carrier_size(); ++y) {
            PartialEquivariantMap f(X, Y, A, {y});
            if (!check_isotropy_condition(f)) continue;
            ++implied;
            EXPECT_TRUE(check_star_condition(f).holds()) << name;
          }
    }
  }
  EXPECT_GT(implied, 20u);
}

TEST(CheckIsotropyCondition, DoesNotImplyStarAcrossOrbits) {
  // Z2 on {0,1,2}: t(0, .) swaps 1 and 2, every other family member is the
  // identity. Distributive with singleton orbits, yet t(0,1) = 2 ties the
  // value at 2 to the values at 0 and 1.
  auto G = Z(2);
  auto X = share(from_family(G, 3, {{{0, 1, 2}, {0, 2, 1}}, {{0, 1, 2}, {0, 1, 2}}, {{0, 1, 2}, {0, 1, 2}}}));
  ASSERT_TRUE(distributive_by_definition(*X));
  const auto p = orbit_partition(X);
  ASSERT_EQ(p.orbit_count(), 3u);

  auto Y = trivial_action(G, 2);
  PartialEquivariantMap f(X, Y, SubsetOfCarrier::full(3), {0, 0, 1});
  EXPECT_TRUE(check_isotropy_condition(f).holds());
  EXPECT_FALSE(check_star_condition(f).holds());
  // Bi-equivariant maps into the trivial action need f(1) = f(2); f(0) is free.
  EXPECT_EQ(all_biequivariant_tables(*X, *Y).size(), 4u);
  EXPECT_FALSE(std::holds_alternative<TotalEquivariantMap>(extend_structural(f)));
}
