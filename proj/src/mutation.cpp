#include "quivertilt/mutation.hpp"

#include <map>
#include <sstream>

namespace quivertilt {

std::string_view to_string(MutationKind k) { return k == MutationKind::Tilt ? "tilt" : "cotilt"; }

BoundQuiver opposite_quiver(const BoundQuiver& q) {
  BoundQuiver op(q.m());
  for (const auto& v : q.vertices()) op.add_vertex(v);
  for (const auto& [id, a] : q.arrows()) op.add_arrow(id, a.target, a.source);
  for (const auto& r : q.relations()) op.add_relation(r.second, r.first);
  return op;
}

namespace {

std::string partner_of(const BoundQuiver& q, const std::vector<std::string>& ins, const std::string& out) {
  for (const auto& b : ins)
    if (!q.has_relation(b, out)) return b;  // ins is sorted, so the least id wins
  return {};
}

MutationCheck tilt_precondition(const BoundQuiver& q, const std::string& x) {
  if (!q.has_vertex(x)) return {false, "unknown vertex '" + x + "'"};
  auto ins = q.in_arrows(x);
  auto outs = q.out_arrows(x);
  for (const auto& a : outs)
    if (q.arrow(a).target == x) return {false, "loop at " + x};
  if (ins.empty()) return {false, x + " is a source"};
  for (const auto& a : outs)
    if (partner_of(q, ins, a).empty())
      return {false, "out-arrow " + a + " has no in-arrow composing outside the ideal"};
  return {true, ""};
}

// The tilt at x, assuming tilt_precondition holds. Reads:
//   beta : b -> x   becomes  x -> b
//   alpha: x -> a   becomes  b -> a for its free partner beta, with (beta, alpha) a relation
//   gamma: c -> b   with (gamma, beta) in I becomes c -> x, related to the other
//                   in-arrow of x when there is one
BoundQuiver tilt_unchecked(const BoundQuiver& q, const std::string& x) {
  auto ins = q.in_arrows(x);
  auto outs = q.out_arrows(x);
  std::map<std::string, Arrow> arrows = q.arrows();
  std::set<Relation> rels = q.relations();
  std::vector<Relation> added;

  for (const auto& a : outs) {
    std::string b = partner_of(q, ins, a);
    arrows[a].source = q.arrow(b).source;
    added.push_back({b, a});
  }
  for (const auto& b : ins)
    for (const auto& a : outs) rels.erase({b, a});

  for (const auto& b : ins) {
    const std::string& bs = q.arrow(b).source;
    for (const auto& g : q.in_arrows(bs)) {
      if (!q.has_relation(g, b)) continue;
      rels.erase({g, b});
      arrows[g].target = x;
      for (const auto& other : ins)
        if (other != b) {
          added.push_back({g, other});
          break;
        }
    }
  }
  for (const auto& b : ins) {
    arrows[b].target = arrows[b].source;
    arrows[b].source = x;
  }

  BoundQuiver out(q.m());
  for (const auto& v : q.vertices()) out.add_vertex(v);
  for (const auto& [id, a] : arrows) out.add_arrow(id, a.source, a.target);
  for (const auto& r : rels) out.add_relation(r.first, r.second);
  for (const auto& r : added) out.add_relation(r.first, r.second);
  return out;
}

BoundQuiver mutate_unchecked(const BoundQuiver& q, const MutationStep& s) {
  if (s.kind == MutationKind::Tilt) return tilt_unchecked(q, s.vertex);
  return opposite_quiver(tilt_unchecked(opposite_quiver(q), s.vertex));
}

}  // namespace

MutationCheck can_mutate(const BoundQuiver& q, const MutationStep& s) {
  MutationCheck pre = s.kind == MutationKind::Tilt ? tilt_precondition(q, s.vertex)
                                                   : tilt_precondition(opposite_quiver(q), s.vertex);
  if (!pre) {
    if (s.kind == MutationKind::Cotilt) {
      if (pre.reason.ends_with(" is a source")) pre.reason = s.vertex + " is a sink";
      if (pre.reason.starts_with("out-arrow "))
        pre.reason = "in-arrow " + pre.reason.substr(10, pre.reason.find(' ', 10) - 10) +
                     " has no out-arrow composing outside the ideal";
    }
    return pre;
  }
  BoundQuiver trial;
  try {
    trial = mutate_unchecked(q, s);
  } catch (const std::exception& e) {
    return {false, std::string("rewrite failed: ") + e.what()};
  }
  auto report = validate_gentle(trial);
  if (!report.ok()) return {false, "result is not gentle: " + report.violations.front().message};
  return {true, ""};
}

std::optional<BoundQuiver> try_mutate(const BoundQuiver& q, const MutationStep& s) {
  bool pre = s.kind == MutationKind::Tilt ? tilt_precondition(q, s.vertex).ok
                                          : tilt_precondition(opposite_quiver(q), s.vertex).ok;
  if (!pre) return std::nullopt;
  try {
    BoundQuiver out = mutate_unchecked(q, s);
    if (validate_gentle(out).ok()) return out;
  } catch (const ParseError&) {
  }
  return std::nullopt;
}

BoundQuiver mutate(const BoundQuiver& q, const MutationStep& s) {
  auto check = can_mutate(q, s);
  if (!check) throw DomainError("cannot " + std::string(to_string(s.kind)) + " at " + s.vertex + ": " + check.reason);
  return mutate_unchecked(q, s);
}

BoundQuiver apply_trace(const BoundQuiver& q, const MutationTrace& t, std::vector<BoundQuiver>* intermediates) {
  BoundQuiver cur = q;
  for (std::size_t i = 0; i < t.size(); ++i) {
    auto check = can_mutate(cur, t[i]);
    if (!check) throw TraceError(i, std::string(to_string(t[i].kind)) + " " + t[i].vertex + ": " + check.reason);
    cur = mutate_unchecked(cur, t[i]);
    if (intermediates) intermediates->push_back(cur);
  }
  return cur;
}

MutationTrace parse_trace(std::string_view text) {
  MutationTrace t;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string kind, vertex, extra;
    if (!(ls >> kind)) continue;
    if (!(ls >> vertex)) throw ParseError(lineno, "missing vertex after '" + kind + "'");
    if (ls >> extra) throw ParseError(lineno, "unexpected token '" + extra + "'");
    if (!is_identifier(vertex)) throw ParseError(lineno, "bad vertex id '" + vertex + "'");
    if (kind == "tilt")
      t.push_back({MutationKind::Tilt, vertex});
    else if (kind == "cotilt")
      t.push_back({MutationKind::Cotilt, vertex});
    else
      throw ParseError(lineno, "unknown step '" + kind + "' (expected tilt or cotilt)");
  }
  return t;
}

std::string serialize_trace(const MutationTrace& t) {
  std::string s;
  for (const auto& step : t) s += std::string(to_string(step.kind)) + " " + step.vertex + "\n";
  return s;
}

}  // namespace quivertilt
