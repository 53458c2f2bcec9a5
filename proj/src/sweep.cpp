#include "quivertilt/sweep.hpp"

#include <random>

#include "quivertilt/cycles.hpp"
#include "quivertilt/generate.hpp"
#include "quivertilt/iso.hpp"
#include "quivertilt/reduction.hpp"

namespace quivertilt {

std::vector<NormalFormParams> normal_form_grid(int m, const GridBounds& b) {
  std::vector<NormalFormParams> out;
  for (int n1 = 1; n1 < b.max_root; ++n1)
    for (int n2 = 1; n1 + n2 <= b.max_root; ++n2)
      for (int k1 = 0; k1 < n1 && k1 <= b.max_cycles; ++k1)
        for (int k2 = 0; k2 < n2 && k1 + k2 <= b.max_cycles; ++k2)
          for (int r = -b.max_r; r <= b.max_r; ++r) {
            NonOriented p{n1, k1, n2, k2, r};
            if (!params_violation(p, m)) out.push_back(p);
          }
  for (int n = 1; n <= b.max_root; ++n)
    for (int t = 0; n + t <= b.max_root; ++t)
      for (int k = 0; k <= b.max_cycles; ++k) {
        Oriented p{k, n, t};
        if (!params_violation(p, m)) out.push_back(p);
      }
  return out;
}

std::vector<GridItem> normal_form_grid(const std::vector<int>& ms, const GridBounds& b) {
  std::vector<GridItem> out;
  for (int m : ms)
    for (auto& p : normal_form_grid(m, b)) out.push_back({p, m});
  return out;
}

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t i) {
  // splitmix64 step, so neighbouring samples get unrelated streams
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (i + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

PhiCheck check_phi(const GridItem& it) {
  PhiCheck c;
  BoundQuiver q = build_normal_form(it.params, it.m);
  c.computed = compute_phi(q);
  c.formula = phi_formula(it.params, it.m);
  c.arrows = q.arrow_count();
  return c;
}

MutationSample check_mutation(const std::vector<BoundQuiver>& pool, const std::vector<PhiInvariant>& phis,
                              std::uint64_t seed, std::uint64_t i) {
  std::mt19937_64 rng(sample_seed(seed, i));
  MutationSample s;
  s.quiver = std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng);
  const BoundQuiver& q = pool[s.quiver];
  std::vector<MutationStep> eligible;
  for (const auto& v : q.vertices())
    for (auto kind : {MutationKind::Tilt, MutationKind::Cotilt})
      if (can_mutate(q, {kind, v})) eligible.push_back({kind, v});
  if (eligible.empty()) return s;
  s.eligible = true;
  s.step = eligible[std::uniform_int_distribution<std::size_t>(0, eligible.size() - 1)(rng)];
  BoundQuiver out = mutate(q, s.step);
  s.gentle = validate_gentle(out).ok();
  s.counts_kept = out.vertex_count() == q.vertex_count() && out.arrow_count() == q.arrow_count();
  s.phi_kept = compute_phi(out) == phis[s.quiver];
  MutationStep back{s.step.kind == MutationKind::Tilt ? MutationKind::Cotilt : MutationKind::Tilt, s.step.vertex};
  if (auto again = try_mutate(out, back)) s.inverse_isomorphic = isomorphic(*again, q);
  return s;
}

ReductionSample check_reduction(std::uint64_t seed, std::uint64_t i) {
  std::mt19937_64 rng(sample_seed(seed, i));
  SolarOptions o;
  o.m = 2 + static_cast<int>(i % 2);
  ReductionSample s;
  s.m = o.m;
  BoundQuiver q = random_solar(rng, o);
  s.arrows = q.arrow_count();
  s.saturated = classify_cycles(q).saturated.size();
  PhiInvariant phi = compute_phi(q);
  try {
    ReductionResult r = reduce(q);
    s.reduced = true;
    s.steps = r.steps.size();
    s.params = to_string(r.params);
    s.phi_equal = compute_phi(build_normal_form_unchecked(r.params, o.m)) == phi;
    if (auto rep = valid_representative(r.params, o.m)) {
      s.representative = to_string(*rep);
      BoundQuiver t = to_m_cluster_tilted_form(*rep, o.m);
      s.recognized = recognize_m_cluster_tilted(t).ok() && compute_phi(t) == phi;
    }
  } catch (const std::exception& e) {
    s.error = e.what();
  }
  return s;
}

std::vector<PhiInvariant> pool_phis(const std::vector<BoundQuiver>& pool) {
  std::vector<PhiInvariant> out;
  out.reserve(pool.size());
  for (const auto& q : pool) out.push_back(compute_phi(q));
  return out;
}

}  // namespace

std::vector<PhiCheck> phi_sweep_serial(const std::vector<GridItem>& items) {
  std::vector<PhiCheck> out;
  out.reserve(items.size());
  for (const auto& it : items) out.push_back(check_phi(it));
  return out;
}

std::vector<PhiCheck> phi_sweep_parallel(const std::vector<GridItem>& items) {
  std::vector<PhiCheck> out(items.size());
  const long n = static_cast<long>(items.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (long i = 0; i < n; ++i) out[i] = check_phi(items[i]);
  return out;
}

std::vector<MutationSample> mutation_sweep_serial(const std::vector<BoundQuiver>& pool, int count,
                                                  std::uint64_t seed) {
  if (pool.empty()) throw DomainError("empty quiver pool");
  auto phis = pool_phis(pool);
  std::vector<MutationSample> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(check_mutation(pool, phis, seed, i));
  return out;
}

std::vector<MutationSample> mutation_sweep_parallel(const std::vector<BoundQuiver>& pool, int count,
                                                    std::uint64_t seed) {
  if (pool.empty()) throw DomainError("empty quiver pool");
  auto phis = pool_phis(pool);
  std::vector<MutationSample> out(count > 0 ? count : 0);
#pragma omp parallel for schedule(dynamic, 4)
  for (int i = 0; i < count; ++i) out[i] = check_mutation(pool, phis, seed, i);
  return out;
}

std::vector<ReductionSample> reduction_sweep_serial(int count, std::uint64_t seed) {
  std::vector<ReductionSample> out;
  for (int i = 0; i < count; ++i) out.push_back(check_reduction(seed, i));
  return out;
}

// Reduction times vary by three orders of magnitude between samples, hence
// chunk size 1.
std::vector<ReductionSample> reduction_sweep_parallel(int count, std::uint64_t seed) {
  std::vector<ReductionSample> out(count > 0 ? count : 0);
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < count; ++i) out[i] = check_reduction(seed, i);
  return out;
}

}  // namespace quivertilt
