#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace anonhard {

enum class ErrorKind {
  LengthMismatch,
  EmptyCluster,
  InvalidPartition,
  Infeasible,
  IndexOutOfRange,
  NotCubic,
  NotSimple,
  TooLarge,
  MissingProvenance,
  NoEdgeGadgetAssigned,
  NotACover,
  NotCanonical,
  EdgeRowConflict,
  Parse,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries one of the kinds above so that
// callers (and the CLI) can branch on it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace anonhard
