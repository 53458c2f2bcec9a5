#include "quivertilt/cycles.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <tuple>

namespace quivertilt {

std::string_view to_string(Orientation o) {
  return o == Orientation::Clockwise ? "clockwise" : "counterclockwise";
}

bool RootCycle::contains(const std::string& arrow) const { return direction_of(arrow).has_value(); }

std::optional<Orientation> RootCycle::direction_of(const std::string& arrow) const {
  for (const auto& a : arrows)
    if (a.arrow == arrow) return a.direction;
  return std::nullopt;
}

bool RootCycle::oriented() const {
  return std::all_of(arrows.begin(), arrows.end(),
                     [&](const OrientedArrow& a) { return a.direction == arrows.front().direction; });
}

namespace {

// GF(2) vector over the arrow set.
struct Bits {
  std::vector<std::uint64_t> words;
  explicit Bits(std::size_t n = 0) : words((n + 63) / 64, 0) {}
  void flip(std::size_t i) { words[i / 64] ^= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words[i / 64] >> (i % 64)) & 1; }
  Bits& operator^=(const Bits& o) {
    for (std::size_t i = 0; i < words.size(); ++i) words[i] ^= o.words[i];
    return *this;
  }
  bool none() const {
    return std::all_of(words.begin(), words.end(), [](std::uint64_t w) { return w == 0; });
  }
  int lowest() const {
    for (std::size_t i = 0; i < words.size(); ++i)
      if (words[i]) return static_cast<int>(i * 64 + __builtin_ctzll(words[i]));
    return -1;
  }
};

class Gf2Basis {
 public:
  // Returns the residual after reduction; inserts it when nonzero.
  Bits reduce(Bits v) const {
    for (const auto& [pivot, row] : rows_)
      if (v.test(pivot)) v ^= row;
    return v;
  }
  bool insert(const Bits& v) {
    Bits r = reduce(v);
    if (r.none()) return false;
    int p = r.lowest();
    for (auto& [pivot, row] : rows_)
      if (row.test(p)) row ^= r;
    rows_.emplace_back(p, r);
    return true;
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  std::vector<std::pair<int, Bits>> rows_;
};

// Vertices of a simple cycle in traversal order, or nullopt if the arrow set
// is not a single simple cycle.
std::optional<RootCycle> as_simple_cycle(const IndexedQuiver& iq, const std::vector<int>& arrows) {
  if (arrows.empty()) return std::nullopt;
  std::vector<std::vector<int>> incident(iq.num_vertices());
  for (int a : arrows) {
    incident[iq.src[a]].push_back(a);
    incident[iq.tgt[a]].push_back(a);
  }
  int start = -1;
  for (std::size_t v = 0; v < incident.size(); ++v) {
    if (incident[v].empty()) continue;
    if (incident[v].size() != 2) return std::nullopt;
    if (start < 0) start = static_cast<int>(v);  // least vertex name
  }
  int first = std::min(incident[start][0], incident[start][1]);
  RootCycle cyc;
  int v = start;
  int a = first;
  do {
    cyc.vertices.push_back(iq.vertex_names[v]);
    bool forward = iq.src[a] == v && !(iq.tgt[a] == v);
    int next = forward ? iq.tgt[a] : iq.src[a];
    cyc.arrows.push_back({iq.arrow_names[a], forward ? Orientation::Clockwise : Orientation::Counterclockwise});
    int other = incident[next][0] == a ? incident[next][1] : incident[next][0];
    v = next;
    a = other;
  } while (v != start);
  if (cyc.arrows.size() != arrows.size()) return std::nullopt;
  return cyc;
}

}  // namespace

std::vector<std::vector<std::string>> full_relation_cycles(const BoundQuiver& q) {
  IndexedQuiver iq(q);
  std::vector<std::vector<std::string>> result;
  std::vector<char> done(iq.num_arrows(), 0);
  for (std::size_t a0 = 0; a0 < iq.num_arrows(); ++a0) {
    if (done[a0]) continue;
    std::vector<int> path;
    int a = static_cast<int>(a0);
    std::vector<char> on_path(iq.num_arrows(), 0);
    while (a >= 0 && !done[a] && !on_path[a]) {
      on_path[a] = 1;
      path.push_back(a);
      a = iq.relation_successor(a);
    }
    if (a >= 0 && on_path[a]) {
      auto it = std::find(path.begin(), path.end(), a);
      std::vector<int> cyc(it, path.end());
      auto least = std::min_element(cyc.begin(), cyc.end());
      std::rotate(cyc.begin(), least, cyc.end());
      std::vector<std::string> names;
      for (int c : cyc) names.push_back(iq.arrow_names[c]);
      result.push_back(std::move(names));
    }
    for (int p : path) done[p] = 1;
  }
  std::sort(result.begin(), result.end());
  return result;
}

CycleReport classify_cycles(const BoundQuiver& q) {
  IndexedQuiver iq(q);
  CycleReport report;
  report.full_relation_cycles = full_relation_cycles(q);
  const std::size_t n_arrows = iq.num_arrows();

  std::vector<Bits> sat_bits;
  for (const auto& cyc : report.full_relation_cycles) {
    if (cyc.size() != static_cast<std::size_t>(q.m()) + 2) continue;
    report.saturated.push_back(SaturatedCycle{cyc, {}, std::nullopt});
    Bits b(n_arrows);
    for (const auto& a : cyc) b.flip(iq.arrow_index(a));
    sat_bits.push_back(b);
  }

  // Spanning forest and fundamental cycles of the underlying multigraph.
  std::vector<int> parent_arrow(iq.num_vertices(), -2);
  std::vector<int> parent(iq.num_vertices(), -1);
  std::vector<int> depth(iq.num_vertices(), 0);
  std::vector<char> tree_arrow(n_arrows, 0);
  std::size_t components = 0;
  for (std::size_t root = 0; root < iq.num_vertices(); ++root) {
    if (parent_arrow[root] != -2) continue;
    ++components;
    parent_arrow[root] = -1;
    std::queue<int> todo;
    todo.push(static_cast<int>(root));
    while (!todo.empty()) {
      int v = todo.front();
      todo.pop();
      auto visit = [&](int a, int w) {
        if (parent_arrow[w] != -2) return;
        parent_arrow[w] = a;
        parent[w] = v;
        depth[w] = depth[v] + 1;
        tree_arrow[a] = 1;
        todo.push(w);
      };
      for (int a : iq.out[v]) visit(a, iq.tgt[a]);
      for (int a : iq.in[v]) visit(a, iq.src[a]);
    }
  }
  std::size_t cycle_rank = n_arrows + components - iq.num_vertices();

  Gf2Basis basis;
  for (const auto& b : sat_bits) basis.insert(b);
  std::size_t free_dims = cycle_rank - basis.rank();
  if (free_dims == 0) return report;
  if (free_dims > 1)
    throw DomainError("ambiguous root cycle: " + std::to_string(free_dims) +
                      " independent non-saturated cycles");

  std::optional<Bits> generator;
  for (std::size_t a = 0; a < n_arrows && !generator; ++a) {
    if (tree_arrow[a]) continue;
    Bits b(n_arrows);
    b.flip(a);
    int u = iq.src[a], w = iq.tgt[a];
    while (u != w) {
      if (depth[u] >= depth[w]) {
        b.flip(parent_arrow[u]);
        u = parent[u];
      } else {
        b.flip(parent_arrow[w]);
        w = parent[w];
      }
    }
    if (!basis.reduce(b).none()) generator = b;
  }

  const std::size_t k = sat_bits.size();
  if (k > 20) throw DomainError("too many saturated cycles for root detection");
  Bits in_any_sat(n_arrows);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t a = 0; a < n_arrows; ++a)
      if (sat_bits[i].test(a) && !in_any_sat.test(a)) in_any_sat.flip(a);

  using Score = std::tuple<std::size_t, std::size_t, std::vector<int>>;
  std::optional<Score> best_score;
  std::optional<RootCycle> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    Bits cand = *generator;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) cand ^= sat_bits[i];
    std::vector<int> arrows;
    std::size_t shared = 0;
    for (std::size_t a = 0; a < n_arrows; ++a)
      if (cand.test(a)) {
        arrows.push_back(static_cast<int>(a));
        if (in_any_sat.test(a)) ++shared;
      }
    auto cyc = as_simple_cycle(iq, arrows);
    if (!cyc) continue;
    Score s{shared, arrows.size(), arrows};
    if (!best_score || s < *best_score) {
      best_score = s;
      best = std::move(cyc);
    }
  }
  if (!best) throw DomainError("no simple root cycle found");
  report.root = std::move(best);

  for (auto& sc : report.saturated) {
    for (const auto& oa : report.root->arrows) {
      if (std::find(sc.arrows.begin(), sc.arrows.end(), oa.arrow) == sc.arrows.end()) continue;
      sc.shared_with_root.push_back(oa.arrow);
      if (!sc.orientation) sc.orientation = oa.direction;
    }
  }
  return report;
}

}  // namespace quivertilt
