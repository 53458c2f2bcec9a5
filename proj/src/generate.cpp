#include "quivertilt/generate.hpp"

#include "quivertilt/cycles.hpp"
#include "quivertilt/families.hpp"

namespace quivertilt {

namespace {

struct Builder {
  BoundQuiver q;
  int vertices = 0, arrows = 0;

  explicit Builder(int m) : q(m) {}

  std::string vertex(const std::string& prefix) {
    std::string v = prefix + std::to_string(vertices++);
    q.add_vertex(v);
    return v;
  }
  std::string arrow(const std::string& prefix, const std::string& s, const std::string& t) {
    std::string a = prefix + std::to_string(arrows++);
    q.add_arrow(a, s, t);
    return a;
  }
  // Saturated cycle through u -> v (the arrow `shared`, which must exist) or,
  // with shared empty, a fresh cycle through u alone.
  void saturated(const std::string& u, const std::string& v, const std::string& shared) {
    int m = q.m();
    std::vector<std::string> path;
    std::string prev = shared.empty() ? u : v;
    int fresh = shared.empty() ? m + 1 : m;
    for (int j = 0; j < fresh; ++j) {
      std::string c = vertex("c");
      path.push_back(arrow("g", prev, c));
      prev = c;
    }
    path.push_back(arrow("g", prev, u));
    if (!shared.empty()) path.insert(path.begin(), shared);
    for (std::size_t j = 0; j < path.size(); ++j) q.add_relation(path[j], path[(j + 1) % path.size()]);
  }
};

std::optional<BoundQuiver> attempt(std::mt19937_64& rng, const SolarOptions& o) {
  auto coin = [&](double p) { return std::uniform_real_distribution<double>(0, 1)(rng) < p; };
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

  Builder b(o.m);
  int len = pick(2, std::max(2, o.max_root));
  bool oriented = coin(o.oriented);
  std::vector<std::string> root;
  std::vector<bool> cw(len, true);
  for (int i = 0; i < len; ++i) root.push_back(b.vertex("r"));
  if (!oriented)
    for (int i = 0; i < len; ++i) cw[i] = coin(0.5);
  std::vector<std::string> edge;
  for (int i = 0; i < len; ++i) {
    const auto& u = root[i];
    const auto& v = root[(i + 1) % len];
    edge.push_back(cw[i] ? b.arrow("e", u, v) : b.arrow("e", v, u));
  }
  int cycles = pick(0, o.max_cycles);

  // internal relations at vertices where two root arrows compose
  for (int i = 0; i < len; ++i) {
    int prev = (i + len - 1) % len;
    if (cw[prev] != cw[i] || !coin(0.35)) continue;
    if (cw[i])
      b.q.add_relation(edge[prev], edge[i]);
    else
      b.q.add_relation(edge[i], edge[prev]);
  }
  // saturated cycles on root arrows
  for (int i = 0; i < len && cycles > 0; ++i) {
    if (!coin(0.3)) continue;
    const Arrow& e = b.q.arrow(edge[i]);
    b.saturated(e.source, e.target, e.id);
    --cycles;
  }
  // rays
  int rays = pick(0, o.max_rays);
  for (int k = 0; k < rays; ++k) {
    int i = pick(0, len - 1);
    const std::string a = root[i];
    int linear = pick(0, o.max_linear);
    int chain = cycles > 0 ? pick(0, cycles) : 0;
    if (linear == 0 && chain == 0) linear = 1;
    cycles -= chain;
    // linear part from a outward
    std::string end = a, first;
    for (int j = 0; j < linear; ++j) {
      std::string w = b.vertex("w");
      std::string l = coin(0.5) ? b.arrow("l", end, w) : b.arrow("l", w, end);
      if (first.empty()) first = l;
      end = w;
    }
    for (int j = 0; j < chain; ++j) {
      int before = b.arrows;
      b.saturated(end, "", "");
      std::string g0 = "g" + std::to_string(before);
      if (first.empty()) first = g0;
      // next cycle hangs at a random vertex of this one
      int step = pick(1, o.m + 1);
      end = b.q.arrow("g" + std::to_string(before + step - 1)).target;
    }
    // union relation: internal if possible and chosen, else external
    std::vector<std::string> ins, outs;
    for (const auto& e : edge) {
      if (b.q.arrow(e).target == a) ins.push_back(e);
      if (b.q.arrow(e).source == a) outs.push_back(e);
    }
    const Arrow& alpha = b.q.arrow(first);
    bool has_internal = false;
    for (const auto& x : ins)
      for (const auto& y : outs) has_internal |= b.q.has_relation(x, y);
    if (has_internal && coin(0.5)) continue;
    if (alpha.source == a && !ins.empty()) {
      const auto& x = ins[pick(0, static_cast<int>(ins.size()) - 1)];
      if (!b.q.has_relation(x, first)) b.q.add_relation(x, first);
    } else if (alpha.target == a && !outs.empty()) {
      const auto& y = outs[pick(0, static_cast<int>(outs.size()) - 1)];
      if (!b.q.has_relation(first, y)) b.q.add_relation(first, y);
    } else if (!has_internal) {
      return std::nullopt;
    }
  }
  if (static_cast<int>(b.q.arrows().size()) > o.max_arrows) return std::nullopt;
  if (!validate_gentle(b.q).ok()) return std::nullopt;
  try {
    auto cyc = classify_cycles(b.q);
    if (!cyc.root || static_cast<int>(cyc.saturated.size()) > o.max_cycles) return std::nullopt;
    if (!recognize_branched(b.q).ok()) return std::nullopt;
  } catch (const DomainError&) {
    return std::nullopt;
  }
  return b.q;
}

}  // namespace

BoundQuiver random_solar(std::mt19937_64& rng, const SolarOptions& o) {
  for (int tries = 0; tries < 10000; ++tries)
    if (auto q = attempt(rng, o)) return *q;
  throw DomainError("random_solar: no sample accepted in 10000 attempts");
}

}  // namespace quivertilt
