#include "support.hpp"

#include <algorithm>

namespace quivertilt::testing {

namespace {

// ray normal form; cb: the arrow between the cycles is c -> b
BoundQuiver rays(int m, bool cb, bool after) {
  Fig f(m);
  f.ar("b2", "z");
  if (!after) {
    f.cycle(cat({"b"}, names("b", 1, m + 1)));
    f.cycle(cat({"c"}, names("c", 1, m + 1)));
    if (cb) f.ar("c", "b"); else f.ar("b", "c");
    f.ar(cb ? "c1" : "c" + std::to_string(m + 1), "a");
  } else if (cb) {
    f.cycle(cat({"b"}, names("b", 1, m + 1)));
    f.cycle(cat({"b", "c"}, names("c", 2, m + 1)));
    f.ar("c1", "c");
    f.ar("c1", "a");
  } else {
    f.cycle(cat({"b"}, names("b", 1, m + 1)));
    f.cycle(cat(cat({"b"}, names("c", 1, m)), {"c"}));
    f.ar("c", "c" + std::to_string(m + 1));
    f.ar("c" + std::to_string(m + 1), "a");
  }
  return f.q;
}

std::vector<Fixture> build() {
  std::vector<Fixture> fx;
  // linear parts have three arrows
  // two glued saturated cycles, move the junction
  fx.push_back({"glued_cycles",
    [](int m) { Fig f(m); f.cycle(cat({"c"}, names("b", 2, m + 2))); f.cycle(cat({"c"}, names("c", 2, m + 2))); return f.q; },
    [](int m) { Fig f(m);
      f.cycle(cat({"c2", "c"}, names("b", 3, m + 2)));
      f.cycle(cat(cat({"c"}, names("c", 3, m + 2)), {"b2"})); return f.q; },
    [](int) { return std::string("cotilt c\n"); }});
  fx.push_back({"ray_shape_in", [](int m) { return rays(m, true, false); }, [](int m) { return rays(m, true, true); },
                [](int) { return std::string("cotilt c\n"); }});
  fx.push_back({"ray_shape_out", [](int m) { return rays(m, false, false); }, [](int m) { return rays(m, false, true); },
                [](int) { return std::string("tilt c\n"); }});


  // reversed first arrow of an outgoing ray with an external union relation
  fx.push_back({"reversed_arrow_external",
    [](int m) { Fig f(m);
      f.path({"o", "d", "b", "a"}); f.ar("o", "a");
      f.ar("b", "c"); f.rel("d", "b", "c");
      f.ar("c", "c3"); f.ar("c3", "c2"); f.ar("c2", "c1"); f.ar("u", "c1"); f.ar("u", "w");
      return f.q; },
    [](int m) { Fig f(m);
      f.path({"o", "d", "c", "b", "a"}); f.ar("o", "a");
      f.ar("c", "c3"); f.rel("d", "c", "c3");
      f.ar("c3", "c2"); f.ar("c2", "c1"); f.ar("c1", "u"); f.ar("u", "w");
      return f.q; },
    [](int) { return std::string("tilt c1\ntilt c2\ntilt c3\ntilt c\n"); }});
  // reversed first arrow of an incoming ray with an internal union relation
  fx.push_back({"reversed_arrow_internal",
    [](int m) { Fig f(m);
      f.path({"o", "x", "c", "z"}); f.ar("o", "z"); f.rel("x", "c", "z");
      f.path({"c3", "c2", "c1", "c"}); f.ar("c3", "u"); f.ar("w", "u");
      return f.q; },
    [](int m) { Fig f(m);
      f.path({"o", "x", "c1", "c"}); f.ar("z", "c"); f.ar("o", "z"); f.rel("x", "c1", "c");
      f.path({"u", "c3", "c2", "c1"}); f.ar("w", "u");
      return f.q; },
    [](int) { return std::string("cotilt c3\ncotilt c2\ncotilt c1\ncotilt c\n"); }});
  // external union relation, ray without saturated cycles
  fx.push_back({"external_relation",
    [](int m) { Fig f(m);
      f.path({"o", "a", "b", "b1"}); f.ar("o", "b1");
      f.path({"b", "c3", "c2", "c1"}); f.rel("a", "b", "c3");
      return f.q; },
    [](int m) { Fig f(m);
      f.path({"o", "a", "c3", "c2", "c1", "b", "b1"}); f.ar("o", "b1");
      return f.q; },
    [](int) { return std::string("tilt c3\ntilt c2\ntilt c1\n"); }});
  // external union relation, ray is a saturated cycle
  fx.push_back({"external_relation_cycle",
    [](int m) { Fig f(m);
      f.path({"o", "a", "b", "b1"}); f.ar("o", "b1");
      f.ar("b", "c"); f.rel("a", "b", "c");
      f.cycle(cat({"c"}, names("c", 1, m + 1)));
      return f.q; },
    [](int m) { Fig f(m);
      std::string top = "c" + std::to_string(m + 1);
      f.path({"o", "a", top, "c", "b", "b1"}); f.ar("o", "b1");
      f.cycle(cat({"c", "b"}, names("c", 1, m)));
      return f.q; },
    [](int m) { return "tilt c\ntilt c" + std::to_string(m + 1) + "\n"; }});
  // internal union relation, linear part then one saturated cycle
  fx.push_back({"internal_relation_ray",
    [](int m) { Fig f(m);
      f.path({"o", "x", "a1", "z"}); f.ar("o", "z"); f.rel("x", "a1", "z");
      f.path({"a3", "a2", "a1"});
      f.cycle(cat({"a3"}, names("c", 1, m + 1)));
      return f.q; },
    [](int m) { Fig f(m);
      std::string top = "c" + std::to_string(m + 1);
      f.ar("o", "x"); f.ar("a1", "x"); f.path({"a2", "a1"});
      f.path({"a3", top, "z"}); f.ar("o", "z"); f.rel("a3", top, "z");
      f.cycle(cat({"a3", "a2"}, names("c", 1, m)));
      return f.q; },
    [](int) { return std::string("tilt a1\ntilt a2\ntilt a3\n"); }});
  // a second cycle glued to the first moves onto the root
  fx.push_back({"internal_relation_second_cycle",
    [](int m) { Fig f(m);
      std::string top = "c" + std::to_string(m + 1), cm = "c" + std::to_string(m);
      f.ar("o", "x"); f.ar("a1", "x"); f.path({"a1", "a2"});
      f.path({"a3", top, "z"}); f.ar("o", "z"); f.rel("a3", top, "z");
      f.cycle(cat({"a3", "a2"}, names("c", 1, m)));
      f.cycle(cat({cm}, names("b", 2, m + 2)));
      return f.q; },
    [](int m) { Fig f(m);
      std::string top = "c" + std::to_string(m + 1), cm = "c" + std::to_string(m);
      f.ar("o", "x"); f.ar("a1", "x"); f.path({"a1", "a2"});
      f.path({"a3", top, "z"}); f.ar("o", "z"); f.rel("a3", top, "z");
      f.cycle(cat(cat({cm, "a2"}, names("c", 1, m - 1)), {"b2"}));
      f.cycle(cat({"a3", cm}, names("b", 3, m + 2)));
      return f.q; },
    [](int m) { return "cotilt c" + std::to_string(m) + "\n"; }});
  // cycle hanging at the middle vertex of an internal relation
  auto hanging = [](int m) { Fig f(m);
    f.path({"o", "a", "b", "c"}); f.ar("o", "c"); f.rel("a", "b", "c");
    f.cycle(cat({"b"}, names("b", 1, m + 1)));
    return f.q; };
  fx.push_back({"hanging_cycle_tilt", hanging,
    [](int m) { Fig f(m);
      std::string top = "b" + std::to_string(m + 1), bm = "b" + std::to_string(m);
      f.ar("o", "a"); f.path({"b", top, "c"}); f.ar("o", "c"); f.rel("b", top, "c");
      f.cycle(cat(cat({"a"}, names("b", 1, m)), {"b"}));
      return f.q; },
    [](int) { return std::string("tilt b\n"); }});
  fx.push_back({"hanging_cycle_cotilt", hanging,
    [](int m) { Fig f(m);
      std::string top = "b" + std::to_string(m + 1);
      f.path({"o", "a", "b1", "b"}); f.rel("a", "b1", "b"); f.ar("c", "b"); f.ar("o", "c");
      f.cycle(cat(cat({"b"}, names("b", 2, m + 1)), {"c"}));
      return f.q; },
    [](int) { return std::string("cotilt b\n"); }});
  // slide a saturated cycle one arrow along the root
  fx.push_back({"gather_cycles",
    [](int m) { Fig f(m);
      f.path({"o", "e", "c", "d", "p"}); f.ar("o", "p");
      f.cycle(cat(cat({"c"}, names("c", 1, m)), {"e"}));
      return f.q; },
    [](int m) { Fig f(m);
      f.path({"o", "e", "c", "d", "p"}); f.ar("o", "p");
      f.cycle(cat({"c", "d"}, names("c", 1, m)));
      return f.q; },
    [](int m) { std::string t;
      for (int i = 1; i <= m; ++i) t += "cotilt c\ncotilt c" + std::to_string(i) + "\n";
      return t + "cotilt c\n"; }});
  // ray without union relation attached through a saturated cycle
  fx.push_back({"ray_through_cycle",
    [](int m) { Fig f(m);
      f.ar("o", "c"); f.ar("o", "a");
      f.cycle(cat(cat({"a"}, names("b", 1, m - 1)), {"b", "c"}));
      f.ar("b", "b" + std::to_string(m));
      return f.q; },
    [](int m) { Fig f(m);
      f.ar("o", "c"); f.ar("o", "a"); f.ar("c", "b");
      f.cycle(cat(cat({"a"}, names("b", 1, m)), {"b"}));
      return f.q; },
    [](int) { return std::string("cotilt b\n"); }});
  // reorient a cycle sharing two counterclockwise arrows (k = 3)
  fx.push_back({"reorient_cycle",
    [](int m) { Fig f(m);
      f.path({"o", "b2", "b1", "c1"}); f.rel("b2", "b1", "c1");
      f.path({"c3", "c2", "c1"}); f.ar("o", "c3");
      std::vector<std::string> cyc = names("c", 1, m + 2);
      std::reverse(cyc.begin(), cyc.end());
      f.cycle(cyc);
      return f.q; },
    [](int m) { Fig f(m);
      f.path({"o", "b2", "c2", "c1"}); f.ar("o", "c3");
      std::vector<std::string> cyc{"c1", "b1"};
      for (int i = m + 2; i >= 3; --i) cyc.push_back("c" + std::to_string(i));
      f.cycle(cyc);
      return f.q; },
    [](int) { return std::string("tilt c1\ntilt c2\n"); }});
  // move an internal relation one step back along a path
  fx.push_back({"slide_relation",
    [](int m) { Fig f(m);
      f.path({"o", "a0", "a1", "a2", "a3"}); f.ar("o", "a3"); f.rel("a1", "a2", "a3");
      return f.q; },
    [](int m) { Fig f(m);
      f.path({"o", "a0", "a2", "a1", "a3"}); f.ar("o", "a3"); f.rel("a0", "a2", "a1");
      return f.q; },
    [](int) { return std::string("cotilt a1\n"); }});
  return fx;
}

}  // namespace

const std::vector<Fixture>& lemma_fixtures() {
  static const std::vector<Fixture> fx = build();
  return fx;
}

BoundQuiver worked_example(bool heavy) {
  Fig f(2);
  f.cycle({"t", "r", "b", "l"});
  f.path({"x", "u1", "u2", "r"});
  f.path({"x", "w1", "w2", "w3", "b"});
  f.path({"y1", "y2", "y3", "x"});
  f.rel("y3", "x", "u1");  // without it x breaks G2
  if (heavy) {
    f.rel("y1", "y2", "y3");
    f.rel("y2", "y3", "x");
  }
  return f.q;
}

}  // namespace quivertilt::testing
