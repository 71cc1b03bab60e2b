#include "anonhard/error.hpp"

namespace anonhard {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::EmptyCluster: return "EmptyCluster";
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotCubic: return "NotCubic";
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::MissingProvenance: return "MissingProvenance";
    case ErrorKind::NoEdgeGadgetAssigned: return "NoEdgeGadgetAssigned";
    case ErrorKind::NotACover: return "NotACover";
    case ErrorKind::NotCanonical: return "NotCanonical";
    case ErrorKind::EdgeRowConflict: return "EdgeRowConflict";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace anonhard
