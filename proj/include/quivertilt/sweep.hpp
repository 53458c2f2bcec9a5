#ifndef QUIVERTILT_SWEEP_HPP
#define QUIVERTILT_SWEEP_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "quivertilt/families.hpp"
#include "quivertilt/mutation.hpp"
#include "quivertilt/phi.hpp"

// Batch checks over independent inputs. Every kernel has a serial version
// and an OpenMP version; both return results in input order, so the two can
// be compared element by element.
namespace quivertilt {

struct GridBounds {
  int max_root = 10;    // n1 + n2, or n + t
  int max_cycles = 3;   // k1 + k2, or k
  int max_r = 4;        // |r|
};

// Every valid parameter tuple within the bounds, non-oriented first.
std::vector<NormalFormParams> normal_form_grid(int m, const GridBounds& b = {});

struct GridItem {
  NormalFormParams params;
  int m = 1;
};

std::vector<GridItem> normal_form_grid(const std::vector<int>& ms, const GridBounds& b = {});

struct PhiCheck {
  PhiInvariant computed;
  PhiInvariant formula;
  std::size_t arrows = 0;
  bool ok() const { return computed == formula; }
  bool operator==(const PhiCheck&) const = default;
};

std::vector<PhiCheck> phi_sweep_serial(const std::vector<GridItem>& items);
std::vector<PhiCheck> phi_sweep_parallel(const std::vector<GridItem>& items);

// One random eligible (vertex, kind) per sample, then the dual step at the
// same vertex. Sample i draws from its own generator seeded by (seed, i).
struct MutationSample {
  std::size_t quiver = 0;  // index into the pool
  MutationStep step;
  bool eligible = false;   // false when the drawn quiver has no mutable vertex
  bool phi_kept = false;
  bool counts_kept = false;
  bool gentle = false;
  bool inverse_isomorphic = false;
  bool ok() const { return eligible && phi_kept && counts_kept && gentle && inverse_isomorphic; }
  bool operator==(const MutationSample&) const = default;
};

std::vector<MutationSample> mutation_sweep_serial(const std::vector<BoundQuiver>& pool, int count,
                                                  std::uint64_t seed);
std::vector<MutationSample> mutation_sweep_parallel(const std::vector<BoundQuiver>& pool, int count,
                                                    std::uint64_t seed);

// Generate a solar quiver (m = 2 for even i, 3 for odd), reduce it, rebuild,
// and push the valid representative through to_m_cluster_tilted_form.
struct ReductionSample {
  int m = 2;
  std::size_t arrows = 0;
  std::size_t saturated = 0;
  bool reduced = false;
  std::string error;
  std::string params;       // as reported by reduce
  std::string representative;
  std::size_t steps = 0;
  bool phi_equal = false;
  bool recognized = false;
  bool ok() const { return reduced && phi_equal && recognized; }
  bool operator==(const ReductionSample&) const = default;
};

std::vector<ReductionSample> reduction_sweep_serial(int count, std::uint64_t seed);
std::vector<ReductionSample> reduction_sweep_parallel(int count, std::uint64_t seed);

// Generator for sample i of a sweep seeded with `seed`.
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t i);

}  // namespace quivertilt

#endif  // QUIVERTILT_SWEEP_HPP
