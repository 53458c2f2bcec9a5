#include "quivertilt/reduction.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

#include "quivertilt/cycles.hpp"
#include "quivertilt/iso.hpp"

namespace quivertilt {

namespace {

struct SideWord {
  std::vector<char> shared;    // per arrow along the path
  std::vector<int> relations;  // i such that (path[i], path[i+1]) is a relation
};

std::pair<int, int> score(const SideWord& w) {
  int inversions = 0, shared_seen = 0;
  for (char s : w.shared) {
    if (s)
      ++shared_seen;
    else
      inversions += shared_seen;
  }
  int c = static_cast<int>(w.relations.size());
  int disp = -c * (c - 1) / 2;
  for (int i : w.relations) disp += i;
  return {inversions, disp};
}

SideWord word_of(const BoundQuiver& q, const std::vector<std::string>& path, const std::set<std::string>& sat,
                 bool cyclic) {
  SideWord w;
  for (const auto& a : path) w.shared.push_back(sat.count(a) ? 1 : 0);
  std::size_t n = path.size();
  std::size_t last = cyclic ? n : n - 1;
  for (std::size_t i = 0; i < last; ++i)
    if (q.has_relation(path[i], path[(i + 1) % n])) w.relations.push_back(static_cast<int>(i));
  return w;
}

}  // namespace

ReductionMeasure reduction_measure(const BoundQuiver& q) {
  CycleReport cr = classify_cycles(q);
  if (!cr.root) throw DomainError("not in class: no root cycle");
  const RootCycle& root = *cr.root;
  std::set<std::string> root_arrows, sat_arrows;
  for (const auto& a : root.arrows) root_arrows.insert(a.arrow);
  for (const auto& c : cr.saturated) sat_arrows.insert(c.arrows.begin(), c.arrows.end());

  ReductionMeasure m{};
  for (const auto& [id, a] : q.arrows())
    if (!root_arrows.count(id) && !sat_arrows.count(id)) ++m[1];
  for (const auto& c : cr.saturated) m[1] += std::abs(1 - static_cast<int>(c.shared_with_root.size()));

  int cw = 0, ccw = 0;
  for (const auto& r : q.relations()) {
    bool internal = root_arrows.count(r.first) && root_arrows.count(r.second);
    bool inside = false;
    for (const auto& c : cr.saturated)
      if (std::find(c.arrows.begin(), c.arrows.end(), r.first) != c.arrows.end() &&
          std::find(c.arrows.begin(), c.arrows.end(), r.second) != c.arrows.end())
        inside = true;
    if (internal)
      (*root.direction_of(r.first) == Orientation::Clockwise ? cw : ccw)++;
    else if (!inside)
      ++m[2];
  }

  const std::size_t len = root.arrows.size();
  if (root.oriented()) {
    std::vector<std::string> path;
    for (const auto& a : root.arrows) path.push_back(a.arrow);
    if (root.arrows.front().direction == Orientation::Counterclockwise) std::reverse(path.begin(), path.end());
    std::pair<int, int> best{1 << 30, 1 << 30};
    for (std::size_t s = 0; s < len; ++s) {
      std::vector<std::string> rot(path.begin() + s, path.end());
      rot.insert(rot.end(), path.begin(), path.begin() + s);
      best = std::min(best, score(word_of(q, rot, sat_arrows, false)));
    }
    m[5] = best.first;
    m[6] = best.second;
    return m;
  }

  // Split the non-oriented root into maximal directed paths, each starting
  // at a source of the root.
  int sources = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < len; ++i) {
    bool out_here = root.arrows[i].direction == Orientation::Clockwise;
    bool out_prev = root.arrows[(i + len - 1) % len].direction == Orientation::Counterclockwise;
    if (out_here && out_prev) {
      ++sources;
      start = i;
    }
  }
  // Reflections at a source or sink swap two neighbouring letters of the
  // direction word, so count how far the word is from one run each way.
  std::vector<char> word;
  for (const auto& a : root.arrows) word.push_back(a.direction == Orientation::Clockwise);
  int best_inv = 1 << 30;
  for (std::size_t s = 0; s < len && sources > 1; ++s) {
    int inv = 0, ccw_seen = 0;
    for (std::size_t j = 0; j < len; ++j) {
      if (word[(s + j) % len])
        inv += ccw_seen;
      else
        ++ccw_seen;
    }
    best_inv = std::min(best_inv, inv);
  }
  m[3] = sources > 1 ? best_inv : 0;
  m[4] = std::min(cw, ccw);
  // Walk the cycle from a source and cut it into same-direction runs.
  std::vector<std::pair<Orientation, std::vector<std::string>>> runs;
  for (std::size_t j = 0; j < len; ++j) {
    const auto& a = root.arrows[(start + j) % len];
    if (runs.empty() || runs.back().first != a.direction) runs.push_back({a.direction, {}});
    runs.back().second.push_back(a.arrow);
  }
  for (auto& [dir, path] : runs) {
    if (dir == Orientation::Counterclockwise) std::reverse(path.begin(), path.end());
    SideWord w = word_of(q, path, sat_arrows, false);
    if (std::all_of(w.shared.begin(), w.shared.end(), [](char c) { return c != 0; })) ++m[0];
    auto [inv, disp] = score(w);
    m[5] += inv;
    m[6] += disp;
  }
  return m;
}

MutationTrace ReductionResult::trace() const {
  MutationTrace t;
  for (const auto& s : steps) t.push_back(s.mutation);
  return t;
}

namespace {

std::string measure_text(const ReductionMeasure& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
  return s + "]";
}

const char* rule_for(std::size_t component) {
  switch (component) {
    case 0: return "free a shared side";
    case 1: return "absorb rays";
    case 2: return "remove external relations";
    case 3: return "group arrows by direction";
    case 4: return "cancel opposite relations";
    case 5: return "gather cycles";
    default: return "slide relations";
  }
}

std::size_t first_difference(const ReductionMeasure& a, const ReductionMeasure& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return i;
  return a.size();
}

}  // namespace

std::string ReductionResult::log() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& s = steps[i];
    out << i + 1 << ' ' << to_string(s.mutation.kind) << ' ' << s.mutation.vertex << "  " << s.rule << "  "
        << measure_text(s.before) << " -> " << measure_text(s.after) << '\n';
  }
  return out.str();
}

nlohmann::json ReductionResult::to_json() const {
  nlohmann::json st = nlohmann::json::array();
  for (const auto& s : steps)
    st.push_back({{"kind", to_string(s.mutation.kind)},
                  {"vertex", s.mutation.vertex},
                  {"rule", s.rule},
                  {"before", s.before},
                  {"after", s.after}});
  return {{"params", params_to_json(params)}, {"steps", st}, {"quiver", quiver_to_json(quiver)}};
}

namespace {

struct Node {
  BoundQuiver q;
  MutationTrace path;
};

std::optional<NormalFormParams> as_normal_form(const BoundQuiver& q) {
  auto d = read_normal_shape(q);
  if (!d) return std::nullopt;
  NormalFormParams p = normal_form_of(*d);
  try {
    if (isomorphic(q, build_normal_form_unchecked(p, q.m()))) return p;
  } catch (const DomainError&) {
  }
  return std::nullopt;
}

// Moves of length 1, plus the walks that slide a saturated cycle one arrow
// along the root: with anchor a on the cycle and the other cycle vertices
// n1..n_{m+1} in order, mutate at a, n1, a, n2, ..., a. Too long for the
// lookahead to find on its own once m > 1.
std::vector<MutationTrace> moves(const BoundQuiver& q) {
  std::vector<MutationTrace> out;
  for (const auto& v : q.vertices())
    for (auto k : {MutationKind::Tilt, MutationKind::Cotilt}) out.push_back({{k, v}});
  CycleReport cyc;
  try {
    cyc = classify_cycles(q);
  } catch (const DomainError&) {
    return out;
  }
  for (const auto& c : cyc.saturated) {
    std::vector<std::string> ring;
    for (const auto& a : c.arrows) ring.push_back(q.arrow(a).source);
    std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i)
      for (int dir : {1, -1})
        for (auto k : {MutationKind::Tilt, MutationKind::Cotilt}) {
          MutationTrace t{{k, ring[i]}};
          for (std::size_t j = 1; j < n - 1; ++j) {
            t.push_back({k, ring[(i + n + dir * j) % n]});
            t.push_back({k, ring[i]});
          }
          out.push_back(std::move(t));
        }
  }
  return out;
}

std::optional<BoundQuiver> try_trace(const BoundQuiver& q, const MutationTrace& t) {
  std::optional<BoundQuiver> cur = q;
  for (const auto& s : t) {
    cur = try_mutate(*cur, s);
    if (!cur) break;
  }
  return cur;
}

// Breadth-first lookahead for the shortest sequence of moves that lowers the
// measure; among sequences of that length the lowest resulting measure wins.
std::optional<Node> improve(const BoundQuiver& q, const ReductionMeasure& base, int max_depth) {
  std::unordered_set<std::string> seen{serialize_quiver(q)};
  std::vector<Node> frontier{{q, {}}};
  for (int depth = 1; depth <= max_depth && !frontier.empty(); ++depth) {
    std::vector<Node> next;
    std::optional<Node> best;
    ReductionMeasure best_m{};
    for (const auto& node : frontier) {
      for (const auto& mv : moves(node.q)) {
        auto q2 = try_trace(node.q, mv);
        if (!q2 || !seen.insert(serialize_quiver(*q2)).second) continue;
        ReductionMeasure m2;
        try {
          m2 = reduction_measure(*q2);
        } catch (const DomainError&) {
          continue;
        }
        Node n{std::move(*q2), node.path};
        n.path.insert(n.path.end(), mv.begin(), mv.end());
        if (m2 < base && (!best || m2 < best_m)) {
          best = n;
          best_m = m2;
        }
        if (depth < max_depth && !best) next.push_back(std::move(n));
      }
    }
    if (best) return best;
    frontier = std::move(next);
  }
  return std::nullopt;
}

}  // namespace

ReductionResult reduce(const BoundQuiver& q, const ReduceOptions& opts) {
  auto gentle = validate_gentle(q);
  if (!gentle.ok()) throw DomainError("not gentle: " + gentle.violations.front().message);
  ReductionResult res{q, NonOriented{}, {}};
  ReductionMeasure cur = reduction_measure(q);
  for (int iter = 0;; ++iter) {
    if (auto p = as_normal_form(res.quiver)) {
      res.params = *p;
      return res;
    }
    if (iter >= opts.max_steps)
      throw DomainError("stuck: step " + std::to_string(res.steps.size()) + ": step limit reached at measure " +
                        measure_text(cur) + "\n" + serialize_quiver(res.quiver));
    auto found = improve(res.quiver, cur, opts.max_depth);
    if (!found && opts.fallback_depth > opts.max_depth) found = improve(res.quiver, cur, opts.fallback_depth);
    if (!found)
      throw DomainError("stuck: step " + std::to_string(res.steps.size()) + ": no mutation sequence of length <= " +
                        std::to_string(std::max(opts.max_depth, opts.fallback_depth)) + " lowers the measure " +
                        measure_text(cur) + "\n" +
                        serialize_quiver(res.quiver));
    ReductionMeasure after = reduction_measure(found->q);
    std::string rule = rule_for(first_difference(cur, after));
    BoundQuiver walk = res.quiver;
    for (const auto& s : found->path) {
      ReductionMeasure before = reduction_measure(walk);
      walk = mutate(walk, s);
      res.steps.push_back({s, rule, before, reduction_measure(walk)});
    }
    res.quiver = std::move(found->q);
    cur = after;
  }
}

std::pair<BoundQuiver, MutationTrace> solarize(const BoundQuiver& q, bool override_check) {
  if (!override_check && !recognize_branched(q).ok()) throw DomainError("not branched");
  BoundQuiver cur = q;
  MutationTrace trace;
  ReductionMeasure m = reduction_measure(cur);
  while (m[1] > 0 || m[2] > 0) {
    auto found = improve(cur, m, ReduceOptions{}.max_depth);
    if (!found) throw DomainError("stuck while normalizing rays at measure " + measure_text(m));
    ReductionMeasure after = reduction_measure(found->q);
    if (after[1] == m[1] && after[2] == m[2]) break;  // only the arrangement moved
    cur = std::move(found->q);
    trace.insert(trace.end(), found->path.begin(), found->path.end());
    m = after;
  }
  return {cur, trace};
}

namespace {

// Relation starts for |rel| relations in runs of at most run_max, runs
// separated by one free composition.
std::vector<int> spread_positions(int rel, int run_max) {
  std::vector<int> pos;
  int i = 0;
  while (static_cast<int>(pos.size()) < rel) {
    for (int j = 0; j < run_max && static_cast<int>(pos.size()) < rel; ++j) pos.push_back(i++);
    ++i;
  }
  return pos;
}

}  // namespace

BoundQuiver to_m_cluster_tilted_form(const NormalFormParams& p, int m) {
  check_params(p, m);
  NormalFormParams target = p;
  if (auto* n = std::get_if<NonOriented>(&p); n && m == 1 && n->r != 0) target = shift_cycles(*n, n->r, m);
  BoundQuiver q = build_normal_form(target, m);
  if (m == 1) return q;

  // Rebuild the relation set of the relation side with spread runs.
  std::vector<std::string> side;
  if (auto* n = std::get_if<NonOriented>(&target)) {
    if (n->r == 0) return q;
    std::string prefix = n->r > 0 ? "a" : "b";
    int len = n->r > 0 ? n->n2 : n->n1;
    for (int i = 0; i < len; ++i) side.push_back(prefix + std::to_string(i));
  } else {
    const auto& o = std::get<Oriented>(target);
    for (int i = 0; i < o.n + o.t; ++i) side.push_back((i < o.n ? "b" : "c") + std::to_string(i));
  }
  std::vector<Relation> old;
  for (std::size_t i = 0; i + 1 < side.size(); ++i)
    if (q.has_relation(side[i], side[i + 1])) old.push_back({side[i], side[i + 1]});
  for (const auto& r : old) q.remove_relation(r.first, r.second);
  for (int i : spread_positions(static_cast<int>(old.size()), m - 1)) q.add_relation(side[i], side[i + 1]);
  return q;
}

}  // namespace quivertilt
