#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pfdimers {

enum class ErrorKind {
  MalformedRotation,
  NegativeWeight,
  DisconnectedGraph,
  InvalidCocycle,
  NotAClosedWalk,
  NotSimple,
  NotAMatching,
  NoMatching,
  OddVertexCount,
  TooLarge,
  NotOrientableForm,
  DegenerateForm,
  LoopEdge,
  OddDimension,
  NotBlockForm,
  CurveNotRealizable,
  NonRealResult,
  WrongSurfaceType,
  BadDimensions,
  OpenSurfaceWord,
  ParseError,
};

std::string_view error_name(ErrorKind kind) noexcept;

// Every failure raised by the library carries one of the kinds above so the
// CLI can report it by name.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_name(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pfdimers
