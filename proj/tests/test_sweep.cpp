#include <gtest/gtest.h>

#include "quivertilt/sweep.hpp"

using namespace quivertilt;

TEST(Grid, OnlyValidTuples) {
  GridBounds b{6, 2, 2};
  for (int m : {1, 2, 3}) {
    auto g = normal_form_grid(m, b);
    EXPECT_FALSE(g.empty());
    for (const auto& p : g) EXPECT_FALSE(params_violation(p, m).has_value()) << to_string(p);
  }
  EXPECT_EQ(normal_form_grid({1, 2}, b).size(), normal_form_grid(1, b).size() + normal_form_grid(2, b).size());
}

TEST(Sweep, PhiSerialMatchesParallel) {
  auto items = normal_form_grid({2, 3}, GridBounds{7, 2, 3});
  auto s = phi_sweep_serial(items);
  auto p = phi_sweep_parallel(items);
  ASSERT_EQ(s.size(), items.size());
  EXPECT_EQ(s, p);
  for (const auto& c : s) EXPECT_TRUE(c.ok());
}

TEST(Sweep, MutationSerialMatchesParallel) {
  std::vector<BoundQuiver> pool;
  for (const auto& it : normal_form_grid(std::vector<int>{2}, GridBounds{6, 2, 2})) pool.push_back(build_normal_form(it.params, it.m));
  auto s = mutation_sweep_serial(pool, 300, 11);
  auto p = mutation_sweep_parallel(pool, 300, 11);
  EXPECT_EQ(s, p);
  int ok = 0;
  for (const auto& x : s) ok += x.ok();
  EXPECT_EQ(ok, 300);
  // a different seed draws different samples
  EXPECT_NE(mutation_sweep_serial(pool, 300, 12), s);
  EXPECT_THROW(mutation_sweep_serial({}, 1, 0), DomainError);
}

TEST(Sweep, ReductionSerialMatchesParallel) {
  auto s = reduction_sweep_serial(6, 5);
  auto p = reduction_sweep_parallel(6, 5);
  EXPECT_EQ(s, p);
  for (const auto& x : s) EXPECT_TRUE(x.ok()) << x.error << ' ' << x.params;
  EXPECT_EQ(s[0].m, 2);
  EXPECT_EQ(s[1].m, 3);
}

TEST(Sweep, SampleSeedsDiffer) {
  EXPECT_NE(sample_seed(1, 0), sample_seed(1, 1));
  EXPECT_NE(sample_seed(1, 0), sample_seed(2, 0));
  EXPECT_EQ(sample_seed(9, 4), sample_seed(9, 4));
}
