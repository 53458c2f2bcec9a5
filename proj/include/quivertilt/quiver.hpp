#ifndef QUIVERTILT_QUIVER_HPP
#define QUIVERTILT_QUIVER_HPP

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace quivertilt {

// Raised for malformed input text or structurally inconsistent quivers.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Raised when an operation's precondition on the quiver does not hold
// (not gentle, not in the class, stuck reduction, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Arrow {
  std::string id;
  std::string source;
  std::string target;

  bool operator==(const Arrow&) const = default;
};

// A quadratic monomial relation: the path that traverses `first`, then `second`.
struct Relation {
  std::string first;
  std::string second;

  auto operator<=>(const Relation&) const = default;
};

bool is_identifier(std::string_view s);

class BoundQuiver {
 public:
  explicit BoundQuiver(int m = 1);

  int m() const { return m_; }
  void set_m(int m);

  void add_vertex(const std::string& v);
  void add_arrow(const std::string& id, const std::string& source, const std::string& target);
  void add_relation(const std::string& first, const std::string& second);
  void remove_relation(const std::string& first, const std::string& second);

  const std::set<std::string>& vertices() const { return vertices_; }
  const std::map<std::string, Arrow>& arrows() const { return arrows_; }
  const std::set<Relation>& relations() const { return relations_; }

  bool has_vertex(const std::string& v) const { return vertices_.count(v) > 0; }
  bool has_arrow(const std::string& id) const { return arrows_.count(id) > 0; }
  const Arrow& arrow(const std::string& id) const;
  bool has_relation(const std::string& first, const std::string& second) const;

  // Arrow ids, sorted.
  std::vector<std::string> out_arrows(const std::string& v) const;
  std::vector<std::string> in_arrows(const std::string& v) const;

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  std::size_t relation_count() const { return relations_.size(); }

  bool operator==(const BoundQuiver&) const = default;

 private:
  int m_;
  std::set<std::string> vertices_;
  std::map<std::string, Arrow> arrows_;
  std::set<Relation> relations_;
};

// Quiver file format:
//   m = <int> / vertex <id> / arrow <id> : <src> -> <tgt> / rel <a> <b>
BoundQuiver parse_quiver(std::string_view text);
std::string serialize_quiver(const BoundQuiver& q);

nlohmann::json quiver_to_json(const BoundQuiver& q);
BoundQuiver quiver_from_json(const nlohmann::json& j);

// Dense integer view used by the combinatorial algorithms. Vertex and arrow
// indices follow the sorted order of the identifiers.
struct IndexedQuiver {
  std::vector<std::string> vertex_names;
  std::vector<std::string> arrow_names;
  std::vector<int> src;
  std::vector<int> tgt;
  std::vector<std::vector<int>> out;  // per vertex, arrow indices
  std::vector<std::vector<int>> in;
  std::set<std::pair<int, int>> rel;

  explicit IndexedQuiver(const BoundQuiver& q);

  int vertex_index(const std::string& v) const;
  int arrow_index(const std::string& a) const;
  bool related(int a, int b) const { return rel.count({a, b}) > 0; }
  std::size_t num_vertices() const { return vertex_names.size(); }
  std::size_t num_arrows() const { return arrow_names.size(); }

  // The unique composable successor of `a` with (a, b) in / not in the ideal,
  // or -1. Assumes gentleness; the lexicographically least is returned otherwise.
  int relation_successor(int a) const;
  int relation_predecessor(int a) const;
  int free_successor(int a) const;
  int free_predecessor(int a) const;
};

enum class GentleCondition { Connected, NoLoops, G1, G2, G3 };

std::string_view to_string(GentleCondition c);

struct Violation {
  GentleCondition condition;
  std::string where;  // vertex or arrow id
  std::string message;
};

struct GentleReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

GentleReport validate_gentle(const BoundQuiver& q);

bool is_connected(const BoundQuiver& q);

}  // namespace quivertilt

#endif  // QUIVERTILT_QUIVER_HPP
