#ifndef QUIVERTILT_REDUCTION_HPP
#define QUIVERTILT_REDUCTION_HPP

#include <array>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "quivertilt/families.hpp"
#include "quivertilt/mutation.hpp"
#include "quivertilt/quiver.hpp"

namespace quivertilt {

// Lexicographic progress measure of the reduction; smaller is closer to a
// normal form. Components, most significant first:
//   0 directed runs of a non-oriented root made only of shared arrows
//   1 ray mass: arrows off the root and outside saturated cycles, plus for
//     every saturated cycle |1 - arrows it shares with the root|
//   2 relations that are neither internal to the root nor inside a
//     saturated cycle
//   3 for a root with several sources: adjacent swaps needed to sort its
//     cyclic word of arrow directions into one clockwise and one
//     counterclockwise run
//   4 internal relations on the minority side
//   5 shared arrows placed before free arrows along a side
//   6 distance of the internal relations from the start of their side
using ReductionMeasure = std::array<int, 7>;

// Throws DomainError when q has no root cycle.
ReductionMeasure reduction_measure(const BoundQuiver& q);

struct ReductionStep {
  MutationStep mutation;
  std::string rule;  // which part of the measure the step improved
  ReductionMeasure before{};
  ReductionMeasure after{};
};

struct ReductionResult {
  BoundQuiver quiver;  // the reduced quiver, isomorphic to build_normal_form(params)
  NormalFormParams params;
  std::vector<ReductionStep> steps;

  MutationTrace trace() const;
  std::string log() const;  // one line per step
  nlohmann::json to_json() const;
};

struct ReduceOptions {
  int max_depth = 4;     // lookahead when no single step improves the measure
  int fallback_depth = 5;  // one deeper search before giving up; slow
  int max_steps = 2000;  // hard cap on accepted steps
};

// Normalizes rays: applies measure-decreasing mutations until every ray has
// been folded into chains of saturated cycles; returns the trace used.
std::pair<BoundQuiver, MutationTrace> solarize(const BoundQuiver& q, bool override_check = false);

// Hill climbing on reduction_measure: every accepted sequence of at most
// max_depth mutations strictly lowers it. Throws DomainError("stuck ...")
// when none does before a normal form is reached.
ReductionResult reduce(const BoundQuiver& q, const ReduceOptions& opts = {});

// The normal form with its internal relations spread into runs of at most
// m-1 separated by free arrows.
BoundQuiver to_m_cluster_tilted_form(const NormalFormParams& p, int m);

}  // namespace quivertilt

#endif  // QUIVERTILT_REDUCTION_HPP
