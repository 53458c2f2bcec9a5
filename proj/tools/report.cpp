#include "report.hpp"

#include <sstream>

#include "quivertilt/cycles.hpp"
#include "quivertilt/families.hpp"

namespace quivertilt::tools {

nlohmann::json gentle_to_json(const GentleReport& r) {
  nlohmann::json v = nlohmann::json::array();
  for (const auto& x : r.violations)
    v.push_back({{"condition", to_string(x.condition)}, {"where", x.where}, {"message", x.message}});
  return {{"gentle", r.ok()}, {"violations", v}};
}

std::string gentle_to_text(const GentleReport& r) {
  if (r.ok()) return "gentle\n";
  std::ostringstream out;
  out << "not gentle\n";
  for (const auto& x : r.violations) out << to_string(x.condition) << ' ' << x.where << ": " << x.message << '\n';
  return out.str();
}

namespace {

nlohmann::json thread_json(const Thread& t) {
  return {{"kind", to_string(t.kind)}, {"label", t.label()}, {"arrows", t.arrows}, {"source", t.source},
          {"target", t.target}, {"sigma", t.sigma}, {"epsilon", t.epsilon}};
}

void thread_line(std::ostream& out, const Thread& t) {
  out << to_string(t.kind) << ' ' << t.label() << ' ' << t.source << " -> " << t.target << " sigma "
      << (t.sigma > 0 ? "+" : "-") << " epsilon " << (t.epsilon > 0 ? "+" : "-") << '\n';
}

}  // namespace

nlohmann::json threads_to_json(const ThreadSet& t) {
  nlohmann::json p = nlohmann::json::array(), f = nlohmann::json::array();
  for (const auto& x : t.permitted) p.push_back(thread_json(x));
  for (const auto& x : t.forbidden) f.push_back(thread_json(x));
  return {{"permitted", p}, {"forbidden", f}};
}

std::string threads_to_text(const ThreadSet& t) {
  std::ostringstream out;
  for (const auto& x : t.permitted) thread_line(out, x);
  for (const auto& x : t.forbidden) thread_line(out, x);
  return out.str();
}

nlohmann::json trace_to_json(const MutationTrace& t) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& s : t) out.push_back({{"kind", to_string(s.kind)}, {"vertex", s.vertex}});
  return out;
}

MutationKind parse_kind(const std::string& s) {
  if (s == "tilt") return MutationKind::Tilt;
  if (s == "cotilt") return MutationKind::Cotilt;
  throw DomainError("unknown mutation kind '" + s + "' (tilt or cotilt)");
}

nlohmann::json classify_json(const BoundQuiver& q, bool params) {
  nlohmann::json j;
  auto g = validate_gentle(q);
  j["gentle"] = g.ok();
  j["violations"] = gentle_to_json(g)["violations"];
  j["m"] = q.m();
  j["root"] = nullptr;
  j["saturated_cycles"] = nlohmann::json::array();
  if (!g.ok()) return j;
  try {
    auto c = classify_cycles(q);
    if (c.root) {
      nlohmann::json arrows = nlohmann::json::array();
      for (const auto& a : c.root->arrows) arrows.push_back({{"arrow", a.arrow}, {"direction", to_string(a.direction)}});
      j["root"] = {{"vertices", c.root->vertices}, {"arrows", arrows}, {"oriented", c.root->oriented()}};
    }
    for (const auto& s : c.saturated)
      j["saturated_cycles"].push_back(
          {{"arrows", s.arrows},
           {"shared_with_root", s.shared_with_root},
           {"orientation", s.orientation ? nlohmann::json(to_string(*s.orientation)) : nlohmann::json(nullptr)}});
  } catch (const DomainError& e) {
    j["cycle_error"] = e.what();
  }
  j["m_cluster_tilted"] = recognize_m_cluster_tilted(q).to_json();
  j["branched"] = recognize_branched(q).to_json();
  if (params) {
    try {
      auto d = extract_params(q);
      j["params"] = derived_to_json(d);
      j["normal_form"] = to_string(normal_form_of(d));
    } catch (const DomainError& e) {
      j["params"] = nullptr;
      j["params_error"] = e.what();
    }
  }
  return j;
}

namespace {

void conditions_text(std::ostream& out, const std::string& name, const nlohmann::json& r) {
  out << name << ": " << (r["ok"].get<bool>() ? "yes" : "no") << '\n';
  for (const auto& c : r["conditions"])
    out << "  " << (c["passed"].get<bool>() ? "pass " : "FAIL ") << c["name"].get<std::string>() << "  "
        << c["detail"].get<std::string>() << '\n';
}

}  // namespace

std::string classify_text(const nlohmann::json& c) {
  std::ostringstream out;
  out << "m " << c["m"].get<int>() << '\n';
  out << (c["gentle"].get<bool>() ? "gentle" : "not gentle") << '\n';
  for (const auto& v : c["violations"])
    out << v["condition"].get<std::string>() << ' ' << v["where"].get<std::string>() << ": "
        << v["message"].get<std::string>() << '\n';
  if (!c["gentle"].get<bool>()) return out.str();
  if (c.contains("cycle_error")) out << "cycles: " << c["cycle_error"].get<std::string>() << '\n';
  if (c["root"].is_null()) {
    out << "root: none\n";
  } else {
    out << "root:";
    for (const auto& a : c["root"]["arrows"])
      out << ' ' << a["arrow"].get<std::string>() << (a["direction"] == "clockwise" ? "+" : "-");
    out << (c["root"]["oriented"].get<bool>() ? "  oriented" : "  non-oriented") << '\n';
  }
  out << "saturated cycles: " << c["saturated_cycles"].size() << '\n';
  for (const auto& s : c["saturated_cycles"]) {
    out << " ";
    for (const auto& a : s["arrows"]) out << ' ' << a.get<std::string>();
    out << "  shared " << s["shared_with_root"].size();
    if (!s["orientation"].is_null()) out << ' ' << s["orientation"].get<std::string>();
    out << '\n';
  }
  conditions_text(out, "m-cluster tilted", c["m_cluster_tilted"]);
  conditions_text(out, "branched", c["branched"]);
  if (c.contains("params")) {
    if (c["params"].is_null())
      out << "params: " << c["params_error"].get<std::string>() << '\n';
    else
      out << "params: " << c["params"].dump() << "  normal form " << c["normal_form"].get<std::string>() << '\n';
  }
  return out.str();
}

nlohmann::json mutable_vertices(const BoundQuiver& q) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& v : q.vertices()) {
    bool t = can_mutate(q, {MutationKind::Tilt, v}).ok;
    bool c = can_mutate(q, {MutationKind::Cotilt, v}).ok;
    if (t || c) out.push_back({{"vertex", v}, {"tilt", t}, {"cotilt", c}});
  }
  return out;
}

}  // namespace quivertilt::tools
