#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>

#include "bispace/action.hpp"
#include "bispace/error.hpp"

namespace bispace {

struct SearchConfig {
  std::uint64_t seed = 0;
  GroupPtr group;
  std::size_t carrier_size = 1;
  /// Number of candidate actions tried by the witness searches; also the
  /// rejection cap per family member in random_binary_action.
  std::size_t max_trials = 1000;
  /// Worker threads for witness searches. The result never depends on it.
  std::size_t threads = 1;
};

/// Trial engines are std::mt19937_64, whose output sequence is fixed by the
/// C++ standard. Bounded draws and shuffles are done here rather than with
/// <random> distributions, whose algorithms are implementation-defined.
using Engine = std::mt19937_64;

/// Engine for trial `t` of a search seeded with `seed`.
Engine trial_engine(std::uint64_t seed, std::uint64_t t);

/// Draws an image for each generator of G (a random permutation of the
/// carrier whose order divides the generator's order) and keeps the draw if
/// it extends to a homomorphism G -> Sym(n). Returns the ordinary action
/// table [g][x], or nothing after `attempts` rejected draws.
std::optional<OrdinaryTable> random_ordinary_action(const FiniteGroup& G, std::size_t n, Engine& rng,
                                                    std::size_t attempts);

/// One random ordinary action per carrier point, assembled with
/// from_family. Deterministic in cfg.seed. Throws TrialsExhausted.
BinaryAction random_binary_action(const SearchConfig& cfg);

struct NondistributiveWitness {
  BinaryAction action;
  /// (g, h, x, x1, x2)
  Witness tuple;
  std::size_t trial;
};

/// First trial (in trial order) whose random action is not distributive.
/// Throws TrialsExhausted.
NondistributiveWitness find_nondistributive_witness(const SearchConfig& cfg);

struct OverlapWitness {
  BinaryAction action;
  /// orbit(x) and orbit(y) intersect, but the intersection is not orbit(x).
  Point x;
  Point y;
  std::size_t trial;
};

/// First trial whose random action has two properly overlapping orbits;
/// within a trial, the lexicographically first (x, y). Throws TrialsExhausted.
OverlapWitness find_overlapping_orbits_witness(const SearchConfig& cfg);

/// Lexicographically first (x, y) with orbit(x) ∩ orbit(y) not in {∅, orbit(x)}.
std::optional<std::pair<Point, Point>> overlapping_orbits(const BinaryAction& a);

}  // namespace bispace
