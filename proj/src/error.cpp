#include "bispace/error.hpp"

#include <sstream>

namespace bispace {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::Malformed: return "Malformed";
    case Errc::NotClosed: return "NotClosed";
    case Errc::NotAssociative: return "NotAssociative";
    case Errc::NoIdentity: return "NoIdentity";
    case Errc::NoInverse: return "NoInverse";
    case Errc::NotASubgroup: return "NotASubgroup";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::CompositionAxiomFailed: return "CompositionAxiomFailed";
    case Errc::IdentityAxiomFailed: return "IdentityAxiomFailed";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::NotAnOrdinaryAction: return "NotAnOrdinaryAction";
    case Errc::MemberNotAnAction: return "MemberNotAnAction";
    case Errc::CarrierMismatch: return "CarrierMismatch";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::NotDistributive: return "NotDistributive";
    case Errc::OverlappingOrbits: return "OverlappingOrbits";
    case Errc::NotATransversal: return "NotATransversal";
    case Errc::GroupMismatch: return "GroupMismatch";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::StarConditionFailed: return "StarConditionFailed";
    case Errc::NoRepresentation: return "NoRepresentation";
    case Errc::TrialsExhausted: return "TrialsExhausted";
    case Errc::ParseError: return "ParseError";
    case Errc::FileNotFound: return "FileNotFound";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

std::string format_witness(const Witness& w) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ',';
    os << w[i];
  }
  os << ')';
  return os.str();
}

namespace {

std::string compose_message(Errc code, const std::string& message, const Witness& witness) {
  std::string out{to_string(code)};
  if (!message.empty()) out += ": " + message;
  if (!witness.empty()) out += " witness=" + format_witness(witness);
  return out;
}

}  // namespace

Error::Error(Errc code, std::string message, Witness witness)
    : std::runtime_error(compose_message(code, message, witness)),
      code_(code),
      witness_(std::move(witness)) {}

}  // namespace bispace
