#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace atlas {

enum class ErrorKind {
  NotNilpotent,
  Singular,
  ExceptionalType,
  InvalidPartition,
  BoxMismatch,
  ZeroOrbit,
  Unsupported,
  RankBound,
  NotInSpan,
  NoSolution,
  UnknownCentralizerDim,
  NoSatakeData,
  RepresentativeUnavailable,
  NotAWitness,
  AmbientExceptionalUnsupported,
  NonIntegerRatio,
  UnknownLabel,
  UnknownCase,
  Usage,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace atlas
