#include "rrc/error.hpp"

namespace rrc {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorKind::NegativeShift: return "NegativeShift";
    case ErrorKind::BadResidue: return "BadResidue";
    case ErrorKind::UnsortedBiword: return "UnsortedBiword";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::InvalidTableau: return "InvalidTableau";
    case ErrorKind::DomainViolation: return "DomainViolation";
    case ErrorKind::UnsupportedClosedForm: return "UnsupportedClosedForm";
    case ErrorKind::InvalidParams: return "InvalidParams";
  }
  return "Unknown";
}

}  // namespace rrc
