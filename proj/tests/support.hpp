#ifndef QUIVERTILT_TESTS_SUPPORT_HPP
#define QUIVERTILT_TESTS_SUPPORT_HPP

#include <functional>
#include <string>
#include <vector>

#include "quivertilt/quiver.hpp"

namespace quivertilt::testing {

// Small drawing kit for figures: arrow ids are "<source>_<target>".
struct Fig {
  BoundQuiver q;
  explicit Fig(int m) : q(m) {}

  void v(const std::string& x) {
    if (!q.has_vertex(x)) q.add_vertex(x);
  }
  std::string ar(const std::string& s, const std::string& t) {
    v(s);
    v(t);
    std::string id = s + "_" + t;
    q.add_arrow(id, s, t);
    return id;
  }
  void path(const std::vector<std::string>& vs) {
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) ar(vs[i], vs[i + 1]);
  }
  // u -> x -> w
  void rel(const std::string& u, const std::string& x, const std::string& w) { q.add_relation(u + "_" + x, x + "_" + w); }
  // closed path with every composition in the ideal; arrows drawn earlier are reused
  void cycle(const std::vector<std::string>& vs) {
    std::size_t n = vs.size();
    for (std::size_t i = 0; i < n; ++i)
      if (!q.has_arrow(vs[i] + "_" + vs[(i + 1) % n])) ar(vs[i], vs[(i + 1) % n]);
    for (std::size_t i = 0; i < n; ++i) rel(vs[i], vs[(i + 1) % n], vs[(i + 2) % n]);
  }
};

inline std::vector<std::string> names(const std::string& p, int from, int to) {
  std::vector<std::string> out;
  for (int i = from; i <= to; ++i) out.push_back(p + std::to_string(i));
  return out;
}

inline std::vector<std::string> cat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline std::string num(const std::string& p, int i) { return p + std::to_string(i); }

// A lemma picture: input, printed result, and the mutation sequence between them.
struct Fixture {
  std::string name;
  std::function<BoundQuiver(int)> before, after;
  std::function<std::string(int)> trace;
};

const std::vector<Fixture>& lemma_fixtures();

// The worked example of a root with one saturated 4-cycle and one ray.
// heavy = false: only the union relation on the ray; true: the whole ray related.
BoundQuiver worked_example(bool heavy);

}  // namespace quivertilt::testing

#endif  // QUIVERTILT_TESTS_SUPPORT_HPP
