#include "quivertilt/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace quivertilt {

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  });
}

BoundQuiver::BoundQuiver(int m) : m_(1) { set_m(m); }

void BoundQuiver::set_m(int m) {
  if (m < 1) throw ParseError(0, "m must be a positive integer");
  m_ = m;
}

void BoundQuiver::add_vertex(const std::string& v) {
  if (!is_identifier(v)) throw ParseError(0, "invalid vertex identifier '" + v + "'");
  if (!vertices_.insert(v).second) throw ParseError(0, "duplicate vertex '" + v + "'");
}

void BoundQuiver::add_arrow(const std::string& id, const std::string& source,
                            const std::string& target) {
  if (!is_identifier(id)) throw ParseError(0, "invalid arrow identifier '" + id + "'");
  if (!has_vertex(source)) throw ParseError(0, "undeclared vertex '" + source + "'");
  if (!has_vertex(target)) throw ParseError(0, "undeclared vertex '" + target + "'");
  if (!arrows_.emplace(id, Arrow{id, source, target}).second)
    throw ParseError(0, "duplicate arrow '" + id + "'");
}

void BoundQuiver::add_relation(const std::string& first, const std::string& second) {
  if (!has_arrow(first)) throw ParseError(0, "undeclared arrow '" + first + "'");
  if (!has_arrow(second)) throw ParseError(0, "undeclared arrow '" + second + "'");
  if (arrows_.at(first).target != arrows_.at(second).source)
    throw ParseError(0, "relation path does not compose: " + first + " " + second);
  if (!relations_.insert(Relation{first, second}).second)
    throw ParseError(0, "duplicate relation " + first + " " + second);
}

void BoundQuiver::remove_relation(const std::string& first, const std::string& second) {
  relations_.erase(Relation{first, second});
}

const Arrow& BoundQuiver::arrow(const std::string& id) const {
  auto it = arrows_.find(id);
  if (it == arrows_.end()) throw DomainError("unknown arrow '" + id + "'");
  return it->second;
}

bool BoundQuiver::has_relation(const std::string& first, const std::string& second) const {
  return relations_.count(Relation{first, second}) > 0;
}

std::vector<std::string> BoundQuiver::out_arrows(const std::string& v) const {
  std::vector<std::string> r;
  for (const auto& [id, a] : arrows_)
    if (a.source == v) r.push_back(id);
  return r;
}

std::vector<std::string> BoundQuiver::in_arrows(const std::string& v) const {
  std::vector<std::string> r;
  for (const auto& [id, a] : arrows_)
    if (a.target == v) r.push_back(id);
  return r;
}

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
    } else if (c == '=' || c == ':') {
      tokens.emplace_back(1, c);
      ++i;
    } else if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
      tokens.emplace_back("->");
      i += 2;
    } else {
      std::size_t j = i;
      while (j < line.size() && std::string_view(" \t\r=:").find(line[j]) == std::string_view::npos &&
             !(line[j] == '-' && j + 1 < line.size() && line[j + 1] == '>'))
        ++j;
      tokens.emplace_back(line.substr(i, j - i));
      i = j;
    }
  }
  return tokens;
}

}  // namespace

BoundQuiver parse_quiver(std::string_view text) {
  BoundQuiver q;
  bool seen_m = false;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tok = tokenize(line);
    if (tok.empty()) {
      if (end == text.size()) break;
      continue;
    }
    try {
      if (tok[0] == "m") {
        if (tok.size() != 3 || tok[1] != "=") throw ParseError(lineno, "expected 'm = <int>'");
        if (seen_m) throw ParseError(lineno, "m declared twice");
        int m = 0;
        try {
          std::size_t used = 0;
          m = std::stoi(tok[2], &used);
          if (used != tok[2].size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
          throw ParseError(lineno, "m is not an integer");
        }
        q.set_m(m);
        seen_m = true;
      } else if (tok[0] == "vertex") {
        if (tok.size() != 2) throw ParseError(lineno, "expected 'vertex <id>'");
        q.add_vertex(tok[1]);
      } else if (tok[0] == "arrow") {
        if (tok.size() != 6 || tok[2] != ":" || tok[4] != "->")
          throw ParseError(lineno, "expected 'arrow <id> : <src> -> <tgt>'");
        q.add_arrow(tok[1], tok[3], tok[5]);
      } else if (tok[0] == "rel") {
        if (tok.size() != 3) throw ParseError(lineno, "expected 'rel <arrow> <arrow>'");
        q.add_relation(tok[1], tok[2]);
      } else {
        throw ParseError(lineno, "unknown directive '" + tok[0] + "'");
      }
    } catch (const ParseError& e) {
      if (e.line() > 0) throw;
      throw ParseError(lineno, e.what());
    }
    if (end == text.size()) break;
  }
  if (!seen_m) throw ParseError(0, "missing 'm = <int>' declaration");
  return q;
}

std::string serialize_quiver(const BoundQuiver& q) {
  std::ostringstream os;
  os << "m = " << q.m() << "\n";
  for (const auto& v : q.vertices()) os << "vertex " << v << "\n";
  for (const auto& [id, a] : q.arrows()) os << "arrow " << id << " : " << a.source << " -> " << a.target << "\n";
  for (const auto& r : q.relations()) os << "rel " << r.first << " " << r.second << "\n";
  return os.str();
}

nlohmann::json quiver_to_json(const BoundQuiver& q) {
  nlohmann::json j;
  j["m"] = q.m();
  j["vertices"] = nlohmann::json::array();
  for (const auto& v : q.vertices()) j["vertices"].push_back(v);
  j["arrows"] = nlohmann::json::array();
  for (const auto& [id, a] : q.arrows())
    j["arrows"].push_back({{"id", id}, {"source", a.source}, {"target", a.target}});
  j["relations"] = nlohmann::json::array();
  for (const auto& r : q.relations()) j["relations"].push_back({{"first", r.first}, {"second", r.second}});
  return j;
}

BoundQuiver quiver_from_json(const nlohmann::json& j) {
  try {
    BoundQuiver q(j.at("m").get<int>());
    for (const auto& v : j.at("vertices")) q.add_vertex(v.get<std::string>());
    for (const auto& a : j.at("arrows"))
      q.add_arrow(a.at("id").get<std::string>(), a.at("source").get<std::string>(),
                  a.at("target").get<std::string>());
    if (j.contains("relations"))
      for (const auto& r : j.at("relations"))
        q.add_relation(r.at("first").get<std::string>(), r.at("second").get<std::string>());
    return q;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("malformed quiver json: ") + e.what());
  }
}

IndexedQuiver::IndexedQuiver(const BoundQuiver& q) {
  vertex_names.assign(q.vertices().begin(), q.vertices().end());
  out.resize(vertex_names.size());
  in.resize(vertex_names.size());
  for (const auto& [id, a] : q.arrows()) {
    int idx = static_cast<int>(arrow_names.size());
    arrow_names.push_back(id);
    src.push_back(vertex_index(a.source));
    tgt.push_back(vertex_index(a.target));
    out[src.back()].push_back(idx);
    in[tgt.back()].push_back(idx);
  }
  for (const auto& r : q.relations()) rel.emplace(arrow_index(r.first), arrow_index(r.second));
}

int IndexedQuiver::vertex_index(const std::string& v) const {
  auto it = std::lower_bound(vertex_names.begin(), vertex_names.end(), v);
  if (it == vertex_names.end() || *it != v) return -1;
  return static_cast<int>(it - vertex_names.begin());
}

int IndexedQuiver::arrow_index(const std::string& a) const {
  auto it = std::lower_bound(arrow_names.begin(), arrow_names.end(), a);
  if (it == arrow_names.end() || *it != a) return -1;
  return static_cast<int>(it - arrow_names.begin());
}

int IndexedQuiver::relation_successor(int a) const {
  for (int b : out[tgt[a]])
    if (related(a, b)) return b;
  return -1;
}

int IndexedQuiver::relation_predecessor(int a) const {
  for (int b : in[src[a]])
    if (related(b, a)) return b;
  return -1;
}

int IndexedQuiver::free_successor(int a) const {
  for (int b : out[tgt[a]])
    if (!related(a, b)) return b;
  return -1;
}

int IndexedQuiver::free_predecessor(int a) const {
  for (int b : in[src[a]])
    if (!related(b, a)) return b;
  return -1;
}

std::string_view to_string(GentleCondition c) {
  switch (c) {
    case GentleCondition::Connected: return "connected";
    case GentleCondition::NoLoops: return "no-loops";
    case GentleCondition::G1: return "G1";
    case GentleCondition::G2: return "G2";
    case GentleCondition::G3: return "G3";
  }
  return "?";
}

bool is_connected(const BoundQuiver& q) {
  IndexedQuiver iq(q);
  if (iq.num_vertices() == 0) return true;
  std::vector<bool> seen(iq.num_vertices(), false);
  std::queue<int> todo;
  todo.push(0);
  seen[0] = true;
  std::size_t count = 1;
  while (!todo.empty()) {
    int v = todo.front();
    todo.pop();
    auto visit = [&](int w) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        todo.push(w);
      }
    };
    for (int a : iq.out[v]) visit(iq.tgt[a]);
    for (int a : iq.in[v]) visit(iq.src[a]);
  }
  return count == iq.num_vertices();
}

GentleReport validate_gentle(const BoundQuiver& q) {
  GentleReport report;
  IndexedQuiver iq(q);
  auto add = [&](GentleCondition c, std::string where, std::string msg) {
    report.violations.push_back({c, std::move(where), std::move(msg)});
  };
  if (!is_connected(q)) add(GentleCondition::Connected, "", "underlying graph is not connected");
  for (std::size_t a = 0; a < iq.num_arrows(); ++a)
    if (iq.src[a] == iq.tgt[a]) add(GentleCondition::NoLoops, iq.arrow_names[a], "arrow is a loop");
  for (std::size_t v = 0; v < iq.num_vertices(); ++v) {
    if (iq.out[v].size() > 2)
      add(GentleCondition::G1, iq.vertex_names[v],
          std::to_string(iq.out[v].size()) + " arrows leave the vertex");
    if (iq.in[v].size() > 2)
      add(GentleCondition::G1, iq.vertex_names[v],
          std::to_string(iq.in[v].size()) + " arrows enter the vertex");
  }
  for (std::size_t a = 0; a < iq.num_arrows(); ++a) {
    int free_succ = 0, rel_succ = 0, free_pred = 0, rel_pred = 0;
    for (int b : iq.out[iq.tgt[a]]) (iq.related(a, b) ? rel_succ : free_succ)++;
    for (int b : iq.in[iq.src[a]]) (iq.related(b, a) ? rel_pred : free_pred)++;
    const auto& name = iq.arrow_names[a];
    if (free_succ > 1) add(GentleCondition::G2, name, "more than one successor outside the ideal");
    if (free_pred > 1) add(GentleCondition::G2, name, "more than one predecessor outside the ideal");
    if (rel_succ > 1) add(GentleCondition::G3, name, "more than one successor inside the ideal");
    if (rel_pred > 1) add(GentleCondition::G3, name, "more than one predecessor inside the ideal");
  }
  return report;
}

}  // namespace quivertilt
