#pragma once

// Error taxonomy. Every failure mode callers are expected to handle gets its
// own type so the CLI can map it to a stable exit code.

#include <stdexcept>
#include <string>

namespace splinespace {

// Exit codes, one per error class. Documented in the README.
enum class ErrorCode : int {
  Ok = 0,
  Internal = 1,
  Parse = 2,
  WrongClass = 3,     // partition class does not admit the requested operation
  NonConvex = 4,
  Disagreement = 5,   // independent dimension computations disagree (bug trap)
  Io = 6,
  Usage = 7,
  Geometry = 8,       // invalid input geometry
  Domain = 9,         // out-of-range query: point, index, degree/smoothness
  BadBasis = 10,      // candidate set fails a basis/solution check
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

#define SPLINESPACE_ERROR(NAME, CODE)                          \
  class NAME : public Error {                                  \
   public:                                                     \
    explicit NAME(const std::string& what)                     \
        : Error(ErrorCode::CODE, std::string(#NAME ": ") + what) {} \
  }

SPLINESPACE_ERROR(ParseError, Parse);
SPLINESPACE_ERROR(IoError, Io);
SPLINESPACE_ERROR(CrossingSegments, Geometry);
SPLINESPACE_ERROR(NotSimplyConnected, Geometry);
SPLINESPACE_ERROR(OpenBoundary, Geometry);
SPLINESPACE_ERROR(DanglingEdge, Geometry);
SPLINESPACE_ERROR(InvalidInput, Geometry);
SPLINESPACE_ERROR(NonConvexDomain, NonConvex);
SPLINESPACE_ERROR(NotCrossCut, WrongClass);
SPLINESPACE_ERROR(NotQuasiCrossCut, WrongClass);
SPLINESPACE_ERROR(NotARefinement, WrongClass);
SPLINESPACE_ERROR(DegreeSmoothnessOrder, Domain);
SPLINESPACE_ERROR(OutOfDomain, Domain);
SPLINESPACE_ERROR(Outside, Domain);
SPLINESPACE_ERROR(IndexOutOfRange, Domain);
SPLINESPACE_ERROR(NotASolution, BadBasis);
SPLINESPACE_ERROR(NotABasis, BadBasis);
SPLINESPACE_ERROR(InternalError, Internal);

#undef SPLINESPACE_ERROR

}  // namespace splinespace
