#ifndef DOMSET_ERRORS_HPP
#define DOMSET_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace domset {

// Shared by thrown InvalidInput errors and by validation violations.
enum class ErrorKind {
  kVertexOutOfRange,
  kSelfLoop,
  kDuplicateEdge,
  kDuplicateNodeId,
  kUnknownNode,
  kCycle,
  kInDegree,
  kRootHasParent,
  kMultipleRoots,
  kUnreachable,
  kDuplicateVertexInNode,
  kVertexUncovered,
  kPathDisconnected,
  kPathBranches,
  kNotAClique,
  kEdgeNotRepresented,
  kPropertyOneViolated,
  kDisconnectedGraph,
  kInvalidParameter,
  kNegativeCount,
  kInconsistentSystem,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Malformed graph, tree, parameter, or linear-system input.
class InvalidInput : public std::runtime_error {
 public:
  InvalidInput(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// An exponential oracle was asked to enumerate beyond its guard.
class SizeGuardExceeded : public std::runtime_error {
 public:
  SizeGuardExceeded(std::string_view what, std::size_t size, std::size_t guard);

  std::size_t size() const noexcept { return size_; }
  std::size_t guard() const noexcept { return guard_; }

 private:
  std::size_t size_;
  std::size_t guard_;
};

}  // namespace domset

#endif  // DOMSET_ERRORS_HPP
