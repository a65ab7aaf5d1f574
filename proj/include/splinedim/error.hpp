#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace splinedim {

enum class ErrorCode {
  ParseError,
  InvalidArgument,
  DegenerateTriangle,
  DuplicateVertex,
  NonManifoldEdge,
  HangingVertex,
  DisconnectedOrHoley,
  OverlappingTriangles,
  NotInteriorVertex,
  NoTotallyInteriorEdge,
  MultipleTotallyInteriorEdges,
  SingularMap,
  TrivialCase,
  OutOfBranch,
  UnsupportedTopology,
  TooLarge,
  DegenerateSlopes,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so the
// CLI can map it to a stable exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace splinedim
