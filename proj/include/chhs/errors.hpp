#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chhs {

enum class ErrorKind {
  UnknownVertex,
  LoopEdge,
  DuplicateEdge,
  NotASimplex,
  CapExceeded,
  Disconnected,
  VertexNotInAmbient,
  EmptyTarget,
  Unreachable,
  MismatchedBase,
  MaximalSimplex,
  EmptyLink,
  EmptySimplex,
  BadLevel,
  EdgeOutsideLink,
  NotAlmostMaximal,
  EndpointOutsideLink,
  ActionNotSimplicial,
  NotAPermutation,
  NotMaximal,
  MaximalClass,
  OrthogonalPair,
  EqualClasses,
  InvalidEmbedding,
  OverlappingBlobs,
  BadParameters,
  ParseError,
  NotMaximalSimplex,
  InvalidPerturbation,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. The kind is stable and machine
/// checkable; the message names the offending object.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace chhs
