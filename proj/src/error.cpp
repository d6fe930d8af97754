#include "sigmafold/error.hpp"

namespace sigma {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Domain: return "Domain";
    case ErrorCode::ForbiddenFacet: return "ForbiddenFacet";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::DuplicateFacet: return "Duplicate";
    case ErrorCode::BadLattice: return "BadLattice";
    case ErrorCode::NotBoundaryEdge: return "NotBoundaryEdge";
    case ErrorCode::NonManifoldEdge: return "NonManifoldEdge";
    case ErrorCode::NotManifold: return "NotManifold";
    case ErrorCode::BoundaryVertex: return "BoundaryVertex";
    case ErrorCode::Unrecognized: return "Unrecognized";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NotSublattice: return "NotSublattice";
    case ErrorCode::OddChi: return "OddChi";
    case ErrorCode::NonOrientable: return "NonOrientable";
    case ErrorCode::EdgeUnmatched: return "EdgeUnmatched";
    case ErrorCode::NonGeneric: return "NonGeneric";
    case ErrorCode::NonParallelogramFace: return "NonParallelogramFace";
    case ErrorCode::DegenerateQuad: return "DegenerateQuad";
    case ErrorCode::InvalidWord: return "InvalidWord";
    case ErrorCode::OverlappingCells: return "OverlappingCells";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::VersionMismatch: return "VersionMismatch";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::Collision: return "Collision";
  }
  return "Unknown";
}

}  // namespace sigma
