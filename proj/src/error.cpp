#include "splinedim/error.hpp"

namespace splinedim {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::NonManifoldEdge: return "NonManifoldEdge";
    case ErrorCode::HangingVertex: return "HangingVertex";
    case ErrorCode::DisconnectedOrHoley: return "DisconnectedOrHoley";
    case ErrorCode::OverlappingTriangles: return "OverlappingTriangles";
    case ErrorCode::NotInteriorVertex: return "NotInteriorVertex";
    case ErrorCode::NoTotallyInteriorEdge: return "NoTotallyInteriorEdge";
    case ErrorCode::MultipleTotallyInteriorEdges: return "MultipleTotallyInteriorEdges";
    case ErrorCode::SingularMap: return "SingularMap";
    case ErrorCode::TrivialCase: return "TrivialCase";
    case ErrorCode::OutOfBranch: return "OutOfBranch";
    case ErrorCode::UnsupportedTopology: return "UnsupportedTopology";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::DegenerateSlopes: return "DegenerateSlopes";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace splinedim
