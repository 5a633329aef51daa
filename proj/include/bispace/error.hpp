#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bispace {

/// Group element index, dense in [0, order).
using Elem = std::size_t;
/// Carrier point index, dense in [0, carrier_size).
using Point = std::size_t;

/// A tuple of indices identifying where a law fails.
using Witness = std::vector<std::size_t>;

enum class Errc {
  Malformed,
  NotClosed,
  NotAssociative,
  NoIdentity,
  NoInverse,
  NotASubgroup,
  IndexOutOfRange,
  CompositionAxiomFailed,
  IdentityAxiomFailed,
  NotInvertible,
  NotAnOrdinaryAction,
  MemberNotAnAction,
  CarrierMismatch,
  EmptyInput,
  NotDistributive,
  OverlappingOrbits,
  NotATransversal,
  GroupMismatch,
  BudgetExceeded,
  StarConditionFailed,
  NoRepresentation,
  TrialsExhausted,
  ParseError,
  FileNotFound,
  IoError,
};

std::string_view to_string(Errc code);

/// Formats a witness as `(a,b,c)`.
std::string format_witness(const Witness& w);

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message, Witness witness = {});

  Errc code() const noexcept { return code_; }
  const Witness& witness() const noexcept { return witness_; }

 private:
  Errc code_;
  Witness witness_;
};

/// Outcome of an exhaustive law check: holds, or a witness where it fails.
struct Verdict {
  std::optional<Witness> witness;

  static Verdict pass() { return {}; }
  static Verdict fail(Witness w) { return {std::move(w)}; }

  bool holds() const noexcept { return !witness.has_value(); }
  explicit operator bool() const noexcept { return holds(); }
};

}  // namespace bispace
