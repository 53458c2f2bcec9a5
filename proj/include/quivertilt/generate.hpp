#ifndef QUIVERTILT_GENERATE_HPP
#define QUIVERTILT_GENERATE_HPP

#include <random>

#include "quivertilt/quiver.hpp"

namespace quivertilt {

struct SolarOptions {
  int m = 2;
  int max_arrows = 40;
  int max_cycles = 3;   // saturated cycles, on rays or on the root
  int max_root = 8;     // root cycle length is drawn from [2, max_root]
  int max_rays = 3;
  int max_linear = 3;   // arrows in the linear part of a ray
  double oriented = 0.2;  // probability of an oriented root
};

// A random solar quiver: a root cycle with internal relations, saturated
// cycles sharing one root arrow, and rays made of a linear part ending in a
// chain of saturated cycles, each hung at a union vertex with a union
// relation. Rejection sampled until the result is gentle and
// recognize_branched accepts it; throws DomainError after 10000 attempts.
BoundQuiver random_solar(std::mt19937_64& rng, const SolarOptions& o = {});

}  // namespace quivertilt

#endif  // QUIVERTILT_GENERATE_HPP
