#include "triad/atom.hpp"

namespace triad {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidAtom: return "InvalidAtom";
    case ErrorKind::DanglingPair: return "DanglingPair";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::PartialMap: return "PartialMap";
    case ErrorKind::NonComposable: return "NonComposable";
    case ErrorKind::UnknownObject: return "UnknownObject";
    case ErrorKind::NotSinglenamed: return "NotSinglenamed";
    case ErrorKind::NotFunctional: return "NotFunctional";
    case ErrorKind::BadNumeral: return "BadNumeral";
    case ErrorKind::TokenClash: return "TokenClash";
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::DegreeOutOfScale: return "DegreeOutOfScale";
    case ErrorKind::InvalidLattice: return "InvalidLattice";
    case ErrorKind::UnknownSymbol: return "UnknownSymbol";
    case ErrorKind::NotDeterministic: return "NotDeterministic";
    case ErrorKind::UnknownReference: return "UnknownReference";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::Io: return "Io";
  }
  return "Error";
}

Atom::Atom(std::string text) : text_(std::move(text)) {
  if (text_.empty()) {
    throw Error(ErrorKind::InvalidAtom, "atom must be nonempty");
  }
  for (unsigned char c : text_) {
    if (c < 0x20 || c == 0x7f) {
      throw Error(ErrorKind::InvalidAtom, "atom contains a control character");
    }
  }
}

}  // namespace triad
