#include "quivertilt/phi.hpp"

#include <queue>
#include <random>
#include <sstream>

#include "quivertilt/cycles.hpp"

namespace quivertilt {

PhiInvariant::PhiInvariant(std::initializer_list<std::pair<const Pair, int>> init) {
  for (const auto& [p, c] : init) add(p.first, p.second, c);
}

void PhiInvariant::add(int n, int m, int count) {
  if (count <= 0) return;
  counts_[{n, m}] += count;
}

int PhiInvariant::count(int n, int m) const {
  auto it = counts_.find({n, m});
  return it == counts_.end() ? 0 : it->second;
}

int PhiInvariant::total() const {
  int t = 0;
  for (const auto& [p, c] : counts_) t += c;
  return t;
}

std::string PhiInvariant::to_text() const {
  std::ostringstream out;
  for (const auto& [p, c] : counts_) out << p.first << ' ' << p.second << ' ' << c << '\n';
  return out.str();
}

std::string PhiInvariant::to_compact() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [p, c] : counts_) {
    if (!first) out << ' ';
    first = false;
    out << '(' << p.first << ',' << p.second << ')';
    if (c > 1) out << 'x' << c;
  }
  return out.str();
}

nlohmann::json PhiInvariant::to_json() const {
  auto arr = nlohmann::json::array();
  for (const auto& [p, c] : counts_) arr.push_back({p.first, p.second, c});
  return arr;
}

PhiInvariant PhiInvariant::from_json(const nlohmann::json& j) {
  PhiInvariant phi;
  for (const auto& t : j) phi.add(t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>());
  return phi;
}

SignAssignment assign_signs(const BoundQuiver& q, std::uint64_t seed) {
  IndexedQuiver iq(q);
  const std::size_t n = iq.num_arrows();
  // Variable 2a is sigma(a), 2a+1 is epsilon(a); every constraint says two
  // variables differ.
  std::vector<std::vector<int>> adj(2 * n);
  auto differ = [&](int u, int v) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  };
  for (std::size_t v = 0; v < iq.num_vertices(); ++v) {
    const auto& out = iq.out[v];
    for (std::size_t i = 0; i < out.size(); ++i)
      for (std::size_t j = i + 1; j < out.size(); ++j) differ(2 * out[i], 2 * out[j]);
    const auto& in = iq.in[v];
    for (std::size_t i = 0; i < in.size(); ++i)
      for (std::size_t j = i + 1; j < in.size(); ++j) differ(2 * in[i] + 1, 2 * in[j] + 1);
    for (int a : in)
      for (int b : out)
        if (!iq.related(a, b)) differ(2 * b, 2 * a + 1);
  }

  std::mt19937_64 rng(seed);
  std::vector<int> value(2 * n, 0);
  for (std::size_t s = 0; s < 2 * n; ++s) {
    if (value[s]) continue;
    value[s] = (seed == 0 || (rng() & 1)) ? 1 : -1;
    std::queue<int> todo;
    todo.push(static_cast<int>(s));
    while (!todo.empty()) {
      int u = todo.front();
      todo.pop();
      for (int v : adj[u]) {
        if (value[v] == 0) {
          value[v] = -value[u];
          todo.push(v);
        } else if (value[v] == value[u]) {
          throw DomainError("inconsistent constraints at arrow " + iq.arrow_names[v / 2]);
        }
      }
    }
  }

  SignAssignment signs;
  for (std::size_t a = 0; a < n; ++a) {
    signs.sigma[iq.arrow_names[a]] = value[2 * a];
    signs.epsilon[iq.arrow_names[a]] = value[2 * a + 1];
  }
  return signs;
}

std::string_view to_string(ThreadKind k) { return k == ThreadKind::Permitted ? "permitted" : "forbidden"; }

std::string Thread::label() const {
  if (trivial()) return std::string(kind == ThreadKind::Permitted ? "h_" : "p_") + source;
  std::string s;
  for (const auto& a : arrows) {
    if (!s.empty()) s += '.';
    s += a;
  }
  return s;
}

ThreadSet enumerate_threads(const BoundQuiver& q, const SignAssignment& signs) {
  IndexedQuiver iq(q);
  ThreadSet ts;
  const std::size_t n = iq.num_arrows();

  auto chains = [&](ThreadKind kind, auto pred, auto succ) {
    std::vector<Thread> out;
    std::vector<char> covered(n, 0);
    for (std::size_t a0 = 0; a0 < n; ++a0) {
      if (pred(static_cast<int>(a0)) >= 0) continue;
      Thread t{kind, {}, iq.vertex_names[iq.src[a0]], "", 0, 0};
      int a = static_cast<int>(a0);
      int last = a;
      while (a >= 0) {
        covered[a] = 1;
        t.arrows.push_back(iq.arrow_names[a]);
        last = a;
        a = succ(a);
      }
      t.target = iq.vertex_names[iq.tgt[last]];
      t.sigma = signs.sigma.at(t.arrows.front());
      t.epsilon = signs.epsilon.at(iq.arrow_names[last]);
      out.push_back(std::move(t));
    }
    return std::make_pair(out, covered);
  };

  auto [permitted, free_covered] = chains(
      ThreadKind::Permitted, [&](int a) { return iq.free_predecessor(a); },
      [&](int a) { return iq.free_successor(a); });
  for (std::size_t a = 0; a < n; ++a)
    if (!free_covered[a])
      throw DomainError("infinite dimensional: relation-free oriented cycle through " + iq.arrow_names[a]);
  // Arrows left uncovered here lie on full-relation cycles, which contribute
  // through step 3 instead of forbidden threads.
  auto [forbidden, rel_covered] = chains(
      ThreadKind::Forbidden, [&](int a) { return iq.relation_predecessor(a); },
      [&](int a) { return iq.relation_successor(a); });
  ts.permitted = std::move(permitted);
  ts.forbidden = std::move(forbidden);

  // Trivial threads. With an in-arrow b and an out-arrow a at x, the
  // permitted one exists when the composite b.a is not a relation and the
  // forbidden one when it is; with fewer arrows both exist.
  for (std::size_t x = 0; x < iq.num_vertices(); ++x) {
    if (iq.in[x].size() > 1 || iq.out[x].size() > 1) continue;
    const std::string& name = iq.vertex_names[x];
    int in = iq.in[x].empty() ? -1 : iq.in[x][0];
    int out = iq.out[x].empty() ? -1 : iq.out[x][0];
    bool want_h = true, want_p = true;
    if (in >= 0 && out >= 0) {
      bool rel = iq.related(in, out);
      want_h = !rel;
      want_p = rel;
    }
    int s_out = out >= 0 ? signs.sigma.at(iq.arrow_names[out]) : 0;
    int e_in = in >= 0 ? signs.epsilon.at(iq.arrow_names[in]) : 0;
    if (want_h) {
      Thread h{ThreadKind::Permitted, {}, name, name, 1, 1};
      if (out >= 0) {
        h.sigma = -s_out;
        h.epsilon = s_out;
      } else if (in >= 0) {
        h.sigma = e_in;
        h.epsilon = -e_in;
      }
      ts.permitted.push_back(h);
    }
    if (want_p) {
      Thread p{ThreadKind::Forbidden, {}, name, name, -1, -1};
      if (out >= 0 || in >= 0) {
        p.sigma = out >= 0 ? -s_out : -e_in;
        p.epsilon = in >= 0 ? -e_in : -s_out;
      }
      ts.forbidden.push_back(p);
    }
  }
  return ts;
}

ThreadSet enumerate_threads(const BoundQuiver& q) { return enumerate_threads(q, assign_signs(q)); }

PhiComputation run_phi(const BoundQuiver& q, std::uint64_t seed) {
  // threads of a non-gentle quiver need not terminate
  if (auto g = validate_gentle(q); !g.ok())
    throw DomainError("not gentle: " + g.violations.front().message);
  PhiComputation pc;
  pc.signs = assign_signs(q, seed);
  pc.threads = enumerate_threads(q, pc.signs);
  const auto& H = pc.threads.permitted;
  const auto& P = pc.threads.forbidden;

  std::map<std::pair<std::string, int>, std::vector<int>> forbidden_by_target;
  std::map<std::pair<std::string, int>, std::vector<int>> permitted_by_source;
  for (std::size_t i = 0; i < P.size(); ++i) forbidden_by_target[{P[i].target, P[i].epsilon}].push_back(i);
  for (std::size_t i = 0; i < H.size(); ++i) permitted_by_source[{H[i].source, H[i].sigma}].push_back(i);

  auto unique = [](const auto& index, const std::pair<std::string, int>& key, std::string_view what) {
    auto it = index.find(key);
    if (it == index.end() || it->second.size() != 1)
      throw DomainError("internal error: no unique " + std::string(what) + " thread at vertex " + key.first);
    return it->second.front();
  };

  std::vector<char> used(H.size(), 0);
  for (std::size_t start = 0; start < H.size(); ++start) {
    if (used[start]) continue;
    PhiLoop loop;
    int h = static_cast<int>(start);
    do {
      if (used[h]) throw DomainError("internal error: thread pairing is not a permutation");
      used[h] = 1;
      loop.permitted.push_back(h);
      int p = unique(forbidden_by_target, {H[h].target, -H[h].epsilon}, "forbidden");
      loop.forbidden.push_back(p);
      loop.length += P[p].length();
      h = unique(permitted_by_source, {P[p].source, -P[p].sigma}, "permitted");
    } while (h != static_cast<int>(start));
    loop.hops = static_cast<int>(loop.permitted.size());
    pc.phi.add(loop.hops, loop.length);
    pc.loops.push_back(std::move(loop));
  }

  pc.relation_cycles = full_relation_cycles(q);
  for (const auto& c : pc.relation_cycles) pc.phi.add(0, static_cast<int>(c.size()));
  return pc;
}

}  // namespace quivertilt
