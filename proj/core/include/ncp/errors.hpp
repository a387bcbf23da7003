#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ncp {

enum class ErrorKind {
  MissingEmptyCodeword,
  IndexOutOfRange,
  NotAProperTrunk,
  NotTotal,
  NotAMorphism,
  NotSurjective,
  SourceMismatch,
  CapExceeded,
  TrivialNeuron,
  HostNotIntersectionComplete,
  HostMismatch,
  NotInHost,
  TypeNotApplicable,
  InvalidCover,
  DimensionMismatch,
  InvalidBox,
  Parse,
  Internal,
};

std::string_view to_string(ErrorKind kind);

/// Domain error raised by every ncp operation. The kind is stable and is
/// what the CLI reports; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ncp
