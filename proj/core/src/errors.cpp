#include "domset/errors.hpp"

namespace domset {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kVertexOutOfRange: return "vertex-out-of-range";
    case ErrorKind::kSelfLoop: return "self-loop";
    case ErrorKind::kDuplicateEdge: return "duplicate-edge";
    case ErrorKind::kDuplicateNodeId: return "duplicate-node-id";
    case ErrorKind::kUnknownNode: return "unknown-node";
    case ErrorKind::kCycle: return "cycle";
    case ErrorKind::kInDegree: return "in-degree";
    case ErrorKind::kRootHasParent: return "root-has-parent";
    case ErrorKind::kMultipleRoots: return "multiple-roots";
    case ErrorKind::kUnreachable: return "unreachable";
    case ErrorKind::kDuplicateVertexInNode: return "duplicate-vertex-in-node";
    case ErrorKind::kVertexUncovered: return "vertex-uncovered";
    case ErrorKind::kPathDisconnected: return "path-disconnected";
    case ErrorKind::kPathBranches: return "path-branches";
    case ErrorKind::kNotAClique: return "not-a-clique";
    case ErrorKind::kEdgeNotRepresented: return "edge-not-represented";
    case ErrorKind::kPropertyOneViolated: return "property-one-violated";
    case ErrorKind::kDisconnectedGraph: return "disconnected-graph";
    case ErrorKind::kInvalidParameter: return "invalid-parameter";
    case ErrorKind::kNegativeCount: return "negative-count";
    case ErrorKind::kInconsistentSystem: return "inconsistent-system";
  }
  return "unknown";
}

SizeGuardExceeded::SizeGuardExceeded(std::string_view what, std::size_t size,
                                     std::size_t guard)
    : std::runtime_error(std::string(what) + " size " + std::to_string(size) +
                         " exceeds enumeration guard " + std::to_string(guard)),
      size_(size),
      guard_(guard) {}

}  // namespace domset
