#ifndef QUIVERTILT_PHI_HPP
#define QUIVERTILT_PHI_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "quivertilt/quiver.hpp"

namespace quivertilt {

// Multiset of pairs (n, m).
class PhiInvariant {
 public:
  using Pair = std::pair<int, int>;

  PhiInvariant() = default;
  PhiInvariant(std::initializer_list<std::pair<const Pair, int>> init);

  void add(int n, int m, int count = 1);
  int count(int n, int m) const;
  const std::map<Pair, int>& counts() const { return counts_; }
  int total() const;  // with multiplicity
  bool empty() const { return counts_.empty(); }

  bool operator==(const PhiInvariant&) const = default;

  // One "n m count" line per pair, sorted.
  std::string to_text() const;
  // Compact single line, e.g. "(0,4)x7 (7,2) (11,2)".
  std::string to_compact() const;
  nlohmann::json to_json() const;  // [[n, m, count], ...]
  static PhiInvariant from_json(const nlohmann::json& j);

 private:
  std::map<Pair, int> counts_;
};

struct SignAssignment {
  std::map<std::string, int> sigma;
  std::map<std::string, int> epsilon;
};

// Constraint propagation over the sigma/epsilon variables. Seed 0 gives +1
// to the first variable of every constraint component (arrows in id order,
// sigma before epsilon); other seeds draw that sign at random.
SignAssignment assign_signs(const BoundQuiver& q, std::uint64_t seed = 0);

enum class ThreadKind { Permitted, Forbidden };

std::string_view to_string(ThreadKind k);

struct Thread {
  ThreadKind kind;
  std::vector<std::string> arrows;  // traversal order; empty for trivial threads
  std::string source;
  std::string target;
  int sigma = 0;
  int epsilon = 0;

  bool trivial() const { return arrows.empty(); }
  int length() const { return static_cast<int>(arrows.size()); }
  std::string label() const;  // "h_x", "p_x", or the arrow ids joined by '.'
};

struct ThreadSet {
  std::vector<Thread> permitted;
  std::vector<Thread> forbidden;
};

// Throws DomainError when a relation-free oriented cycle makes the algebra
// infinite dimensional.
ThreadSet enumerate_threads(const BoundQuiver& q, const SignAssignment& signs);
ThreadSet enumerate_threads(const BoundQuiver& q);

struct PhiLoop {
  std::vector<int> permitted;  // indices into ThreadSet::permitted, in visiting order
  std::vector<int> forbidden;
  int hops = 0;
  int length = 0;
};

struct PhiComputation {
  SignAssignment signs;
  ThreadSet threads;
  std::vector<PhiLoop> loops;
  std::vector<std::vector<std::string>> relation_cycles;
  PhiInvariant phi;
};

PhiComputation run_phi(const BoundQuiver& q, std::uint64_t seed = 0);

inline PhiInvariant compute_phi(const BoundQuiver& q, std::uint64_t seed = 0) { return run_phi(q, seed).phi; }

}  // namespace quivertilt

#endif  // QUIVERTILT_PHI_HPP
