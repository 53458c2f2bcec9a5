#ifndef QUIVERTILT_CYCLES_HPP
#define QUIVERTILT_CYCLES_HPP

#include <optional>
#include <string>
#include <vector>

#include "quivertilt/quiver.hpp"

namespace quivertilt {

enum class Orientation { Clockwise, Counterclockwise };

inline Orientation opposite(Orientation o) {
  return o == Orientation::Clockwise ? Orientation::Counterclockwise : Orientation::Clockwise;
}

std::string_view to_string(Orientation o);

struct OrientedArrow {
  std::string arrow;
  Orientation direction;
};

// The root cycle as a closed walk: arrows[i] joins vertices[i] and
// vertices[i+1] (indices mod length). An arrow is clockwise when it points
// along the traversal.
struct RootCycle {
  std::vector<std::string> vertices;
  std::vector<OrientedArrow> arrows;

  bool contains(const std::string& arrow) const;
  std::optional<Orientation> direction_of(const std::string& arrow) const;
  bool oriented() const;  // all arrows point the same way
};

struct SaturatedCycle {
  std::vector<std::string> arrows;  // in path order, starting at the least id
  std::vector<std::string> shared_with_root;
  // Direction of the first shared arrow along the root traversal; absent
  // for cycles that only meet the root at vertices (or not at all).
  std::optional<Orientation> orientation;
};

struct CycleReport {
  std::optional<RootCycle> root;
  std::vector<SaturatedCycle> saturated;
  // Every directed cycle whose consecutive compositions all lie in the
  // ideal, including those of length other than m+2.
  std::vector<std::vector<std::string>> full_relation_cycles;
};

// Directed cycles made entirely of relations, each listed once.
std::vector<std::vector<std::string>> full_relation_cycles(const BoundQuiver& q);

// Throws DomainError("ambiguous root cycle") when the cycle space has more
// than one dimension beyond the saturated cycles.
CycleReport classify_cycles(const BoundQuiver& q);

}  // namespace quivertilt

#endif  // QUIVERTILT_CYCLES_HPP
