#ifndef QUIVERTILT_ISO_HPP
#define QUIVERTILT_ISO_HPP

#include <map>
#include <optional>
#include <string>

#include "quivertilt/quiver.hpp"

namespace quivertilt {

struct QuiverIsomorphism {
  std::map<std::string, std::string> vertices;
  std::map<std::string, std::string> arrows;
};

// Bijection on vertices and arrows preserving sources, targets and the
// relation set. The parameter m is not compared.
std::optional<QuiverIsomorphism> find_isomorphism(const BoundQuiver& a, const BoundQuiver& b);

inline bool isomorphic(const BoundQuiver& a, const BoundQuiver& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace quivertilt

#endif  // QUIVERTILT_ISO_HPP
