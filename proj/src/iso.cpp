#include "quivertilt/iso.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <tuple>
#include <vector>

namespace quivertilt {

namespace {

struct Side {
  IndexedQuiver iq;
  std::vector<int> vcolor;
  std::vector<int> acolor;
  explicit Side(const BoundQuiver& q) : iq(q) {}
};

int arrow_flags(const IndexedQuiver& iq, int a) {
  return (iq.relation_successor(a) >= 0 ? 1 : 0) | (iq.relation_predecessor(a) >= 0 ? 2 : 0) |
         (iq.free_successor(a) >= 0 ? 4 : 0) | (iq.free_predecessor(a) >= 0 ? 8 : 0);
}

// Colour refinement run on both quivers with a shared palette, so equal
// colours mean equal refined neighbourhoods across the pair.
void refine(Side& x, Side& y) {
  using Sig = std::vector<int>;
  auto initial = [](Side& s) {
    s.vcolor.assign(s.iq.num_vertices(), 0);
    for (std::size_t v = 0; v < s.iq.num_vertices(); ++v)
      s.vcolor[v] = static_cast<int>(s.iq.in[v].size() * 16 + s.iq.out[v].size());
  };
  initial(x);
  initial(y);
  std::size_t classes = 0;
  for (std::size_t round = 0; round <= x.iq.num_vertices() + 1; ++round) {
    std::map<Sig, int> palette;
    auto signature = [](const Side& s, int v) {
      Sig sig{s.vcolor[v]};
      std::vector<std::pair<int, int>> outs, ins;
      for (int a : s.iq.out[v]) outs.emplace_back(arrow_flags(s.iq, a), s.vcolor[s.iq.tgt[a]]);
      for (int a : s.iq.in[v]) ins.emplace_back(arrow_flags(s.iq, a), s.vcolor[s.iq.src[a]]);
      std::sort(outs.begin(), outs.end());
      std::sort(ins.begin(), ins.end());
      sig.push_back(-1);
      for (auto [f, c] : outs) sig.insert(sig.end(), {f, c});
      sig.push_back(-2);
      for (auto [f, c] : ins) sig.insert(sig.end(), {f, c});
      return sig;
    };
    std::vector<Sig> sx, sy;
    for (std::size_t v = 0; v < x.iq.num_vertices(); ++v) sx.push_back(signature(x, static_cast<int>(v)));
    for (std::size_t v = 0; v < y.iq.num_vertices(); ++v) sy.push_back(signature(y, static_cast<int>(v)));
    for (const auto& s : sx) palette.emplace(s, 0);
    for (const auto& s : sy) palette.emplace(s, 0);
    int next = 0;
    for (auto& [sig, c] : palette) c = next++;
    for (std::size_t v = 0; v < sx.size(); ++v) x.vcolor[v] = palette[sx[v]];
    for (std::size_t v = 0; v < sy.size(); ++v) y.vcolor[v] = palette[sy[v]];
    if (palette.size() == classes) break;
    classes = palette.size();
  }
  auto arrows = [](Side& s) {
    s.acolor.resize(s.iq.num_arrows());
    for (std::size_t a = 0; a < s.iq.num_arrows(); ++a)
      s.acolor[a] = (s.vcolor[s.iq.src[a]] * 4096 + s.vcolor[s.iq.tgt[a]]) * 16 +
                    arrow_flags(s.iq, static_cast<int>(a));
  };
  arrows(x);
  arrows(y);
}

template <typename T>
std::vector<T> sorted(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

std::optional<QuiverIsomorphism> find_isomorphism(const BoundQuiver& qa, const BoundQuiver& qb) {
  if (qa.vertex_count() != qb.vertex_count() || qa.arrow_count() != qb.arrow_count() ||
      qa.relation_count() != qb.relation_count())
    return std::nullopt;
  Side x(qa), y(qb);
  refine(x, y);
  if (sorted(x.vcolor) != sorted(y.vcolor) || sorted(x.acolor) != sorted(y.acolor)) return std::nullopt;

  const std::size_t nv = x.iq.num_vertices();
  const std::size_t na = x.iq.num_arrows();

  // Arrow order: BFS over the underlying graph so each arrow after the first
  // in a component touches an already mapped vertex.
  std::vector<int> order;
  {
    std::vector<char> seen_a(na, 0), seen_v(nv, 0);
    for (std::size_t s = 0; s < nv; ++s) {
      if (seen_v[s]) continue;
      std::queue<int> todo;
      todo.push(static_cast<int>(s));
      seen_v[s] = 1;
      while (!todo.empty()) {
        int v = todo.front();
        todo.pop();
        auto take = [&](int a, int w) {
          if (!seen_a[a]) {
            seen_a[a] = 1;
            order.push_back(a);
          }
          if (!seen_v[w]) {
            seen_v[w] = 1;
            todo.push(w);
          }
        };
        for (int a : x.iq.out[v]) take(a, x.iq.tgt[a]);
        for (int a : x.iq.in[v]) take(a, x.iq.src[a]);
      }
    }
  }

  std::vector<int> vmap(nv, -1), vinv(nv, -1), amap(na, -1), ainv(na, -1);

  auto bind_vertex = [&](int v, int w, std::vector<std::pair<int, int>>& undo) {
    if (vmap[v] >= 0) return vmap[v] == w;
    if (vinv[w] >= 0) return false;
    if (x.vcolor[v] != y.vcolor[w]) return false;
    vmap[v] = w;
    vinv[w] = v;
    undo.emplace_back(v, w);
    return true;
  };

  auto relations_agree = [&](int a, int b) {
    auto check = [&](int c) {
      int d = amap[c];
      if (d < 0) return true;
      return x.iq.related(a, c) == y.iq.related(b, d) && x.iq.related(c, a) == y.iq.related(d, b);
    };
    for (int c : x.iq.out[x.iq.tgt[a]])
      if (!check(c)) return false;
    for (int c : x.iq.in[x.iq.src[a]])
      if (!check(c)) return false;
    return true;
  };

  std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
    if (i == order.size()) return true;
    int a = order[i];
    for (std::size_t bi = 0; bi < na; ++bi) {
      int b = static_cast<int>(bi);
      if (ainv[b] >= 0 || x.acolor[a] != y.acolor[b]) continue;
      std::vector<std::pair<int, int>> undo;
      bool ok = bind_vertex(x.iq.src[a], y.iq.src[b], undo) && bind_vertex(x.iq.tgt[a], y.iq.tgt[b], undo);
      if (ok) {
        amap[a] = b;
        ainv[b] = a;
        if (relations_agree(a, b) && search(i + 1)) return true;
        amap[a] = -1;
        ainv[b] = -1;
      }
      for (auto [v, w] : undo) {
        vmap[v] = -1;
        vinv[w] = -1;
      }
    }
    return false;
  };
  if (!search(0)) return std::nullopt;

  // Isolated vertices carry no arrows; match them by colour.
  for (std::size_t v = 0; v < nv; ++v) {
    if (vmap[v] >= 0) continue;
    for (std::size_t w = 0; w < nv; ++w)
      if (vinv[w] < 0 && x.vcolor[v] == y.vcolor[w]) {
        vmap[v] = static_cast<int>(w);
        vinv[w] = static_cast<int>(v);
        break;
      }
    if (vmap[v] < 0) return std::nullopt;
  }

  QuiverIsomorphism iso;
  for (std::size_t v = 0; v < nv; ++v) iso.vertices[x.iq.vertex_names[v]] = y.iq.vertex_names[vmap[v]];
  for (std::size_t a = 0; a < na; ++a) iso.arrows[x.iq.arrow_names[a]] = y.iq.arrow_names[amap[a]];
  return iso;
}

}  // namespace quivertilt
