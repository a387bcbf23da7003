#include "ncp/errors.hpp"

namespace ncp {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MissingEmptyCodeword: return "MissingEmptyCodeword";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotAProperTrunk: return "NotAProperTrunk";
    case ErrorKind::NotTotal: return "NotTotal";
    case ErrorKind::NotAMorphism: return "NotAMorphism";
    case ErrorKind::NotSurjective: return "NotSurjective";
    case ErrorKind::SourceMismatch: return "SourceMismatch";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::TrivialNeuron: return "TrivialNeuron";
    case ErrorKind::HostNotIntersectionComplete: return "HostNotIntersectionComplete";
    case ErrorKind::HostMismatch: return "HostMismatch";
    case ErrorKind::NotInHost: return "NotInHost";
    case ErrorKind::TypeNotApplicable: return "TypeNotApplicable";
    case ErrorKind::InvalidCover: return "InvalidCover";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidBox: return "InvalidBox";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace ncp
