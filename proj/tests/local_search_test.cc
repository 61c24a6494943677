// Copyright 2026 The rankprice Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>

#include <gtest/gtest.h>

#include "core/evaluator.h"
#include "core/local_search.h"
#include "core/status.h"
#include "support/oracles.h"

namespace rankprice {
namespace {

using testing::Table1;
using testing::Table1Fill;

class Table1LocalSearch : public ::testing::Test {
 protected:
  Solution At(const Instance& inst, Money p1, Money p2) {
    const BudgetGrid grid = BuildGrid(inst);
    const std::vector<Money> prices = {p1, p2};
    return MakeSolution(inst, grid, PriceVectorFromPrices(grid, prices, 2));
  }
  std::vector<Money> Prices(const Solution& s) {
    return RealizePrices(grid_, s.prices);
  }

  Instance inst_ = Table1();
  BudgetGrid grid_ = BuildGrid(inst_);
};

TEST_F(Table1LocalSearch, SlackExample) {
  const Solution in = At(inst_, 34, 34);
  ASSERT_EQ(in.assignment.revenue, 204);
  const Solution out = Slack(inst_, grid_, in);
  EXPECT_EQ(Prices(out), (std::vector<Money>{42, 34}));
  EXPECT_EQ(out.assignment.revenue, 228);
  EXPECT_EQ(out.assignment.chosen, in.assignment.chosen);
}

TEST_F(Table1LocalSearch, SlackIsIdempotent) {
  const Solution once = Slack(inst_, grid_, At(inst_, 34, 34));
  const Solution twice = Slack(inst_, grid_, once);
  EXPECT_EQ(twice.prices, once.prices);
  EXPECT_EQ(twice.assignment, once.assignment);
}

TEST_F(Table1LocalSearch, FillExample) {
  const Instance fill = Table1Fill();
  const BudgetGrid grid = BuildGrid(fill);
  Solution in = At(fill, 66, 66);
  ASSERT_EQ(in.assignment.revenue, 132);
  LocalSearchStats stats;
  const Solution out = Fill(fill, grid, in, &stats);
  EXPECT_EQ(RealizePrices(grid, out.prices), (std::vector<Money>{66, 18}));
  EXPECT_EQ(out.assignment.revenue, 240);
  EXPECT_EQ(stats.fill_reverts, 0);
  EXPECT_EQ(stats.fill_poaching, 0);
}

TEST_F(Table1LocalSearch, FillWithoutUnsoldProductsIsIdentity) {
  const Solution in = At(inst_, 50, 34);
  const Solution out = Fill(inst_, grid_, in);
  EXPECT_EQ(out.prices, in.prices);
  EXPECT_EQ(out.assignment, in.assignment);
}

TEST(FillTest, NoInterestedUnassignedCustomer) {
  // Product 2 is unsold and its only fan already buys product 1.
  const Instance inst =
      Instance::Create("x", 2, 2, {10, 20}, {{2, 1}, {1, std::nullopt}});
  const BudgetGrid grid = BuildGrid(inst);
  const Solution in = MakeSolution(inst, grid, PriceVector{{0, 1}});
  ASSERT_EQ(in.assignment.chosen, (std::vector<int>{0, 0}));
  const Solution out = Fill(inst, grid, in);
  EXPECT_EQ(out.prices, in.prices);
}

TEST_F(Table1LocalSearch, ReassignExample) {
  const Solution in = At(inst_, 18, 27);
  ASSERT_EQ(in.assignment.revenue, 180);
  const Solution out = Reassign(inst_, grid_, in);
  EXPECT_EQ(Prices(out), (std::vector<Money>{42, 27}));
  EXPECT_EQ(out.assignment.revenue, 234);
}

TEST(ReassignTest, SingleBuyerIsSkipped) {
  const Instance inst = Instance::Create("x", 1, 2, {10, 20}, {{1}, {1}});
  const BudgetGrid grid = BuildGrid(inst);
  // Only customer 2 can afford 20.
  const Solution in = MakeSolution(inst, grid, PriceVector{{1}});
  LocalSearchStats stats;
  const Solution out = Reassign(inst, grid, in, &stats);
  EXPECT_EQ(out.prices, in.prices);
  EXPECT_EQ(stats.evaluations, 0);
}

// Searches random instances for a slack-free state whose reassignment move
// loses revenue; the guard must restore the input.
TEST(ReassignTest, LosingMoveIsReverted) {
  std::mt19937_64 gen(5);
  int found = 0;
  for (int trial = 0; trial < 5000 && found < 20; ++trial) {
    const Instance inst = testing::RandomInstance(gen, 3, 6, 30, 0.2);
    const BudgetGrid grid = BuildGrid(inst);
    const std::vector<Money> prices = testing::RandomGridPrices(gen, inst);
    const Solution in = Slack(
        inst, grid,
        MakeSolution(inst, grid,
                     PriceVectorFromPrices(grid, prices, inst.num_products())));
    // Does any single reassignment move lose revenue from this state?
    bool losing = false;
    for (int i = 0; i < inst.num_products() && !losing; ++i) {
      std::vector<Money> budgets;
      for (int k = 0; k < inst.num_customers(); ++k) {
        if (in.assignment.chosen[k] == i) budgets.push_back(inst.budget(k));
      }
      if (budgets.size() < 2) continue;
      std::sort(budgets.begin(), budgets.end());
      std::vector<Money> trial_prices = RealizePrices(grid, in.prices);
      if (trial_prices[i] == budgets[1]) continue;
      trial_prices[i] = budgets[1];
      losing = testing::AssignOracle(inst, trial_prices).revenue <
               in.assignment.revenue;
    }
    if (!losing || inst.num_products() != 1) continue;
    LocalSearchStats stats;
    const Solution out = Reassign(inst, grid, in, &stats);
    ASSERT_EQ(out.prices, in.prices);
    ASSERT_EQ(out.assignment, in.assignment);
    ASSERT_EQ(stats.reassign_reverts, 1);
    ++found;
  }
  EXPECT_GT(found, 0);
}

TEST_F(Table1LocalSearch, ConditionalReassignExample) {
  const Solution in = At(inst_, 42, 42);
  ASSERT_EQ(in.assignment.revenue, 210);
  const Solution out = ConditionalReassign(inst_, grid_, in);
  EXPECT_EQ(Prices(out), (std::vector<Money>{50, 42}));
  EXPECT_EQ(out.assignment.revenue, 226);
}

TEST_F(Table1LocalSearch, ConditionalNeedsFallbackProduct) {
  // At (42,34) product 1's poorest buyer has budget 42 but product 2 is not
  // priced at 42.
  const Solution in = Slack(inst_, grid_, At(inst_, 42, 34));
  LocalSearchStats stats;
  const Solution out = ConditionalReassign(inst_, grid_, in, &stats);
  EXPECT_EQ(out.prices, in.prices);
  EXPECT_EQ(stats.evaluations, 0);
}

TEST(ConditionalReassignTest, SingleBuyersOnly) {
  const Instance inst =
      Instance::Create("x", 2, 2, {10, 20}, {{2, 1}, {1, 2}});
  const BudgetGrid grid = BuildGrid(inst);
  const Solution in = MakeSolution(inst, grid, PriceVector{{0, 1}});
  const Solution out = ConditionalReassign(inst, grid, in);
  EXPECT_EQ(out.prices, in.prices);
}

TEST_F(Table1LocalSearch, OptBasedExample) {
  const Solution in = At(inst_, 42, 34);
  ASSERT_EQ(in.assignment.revenue, 228);
  const std::vector<int> second_only = {1};
  const Solution step = OptBased(inst_, grid_, in, second_only);
  EXPECT_EQ(Prices(step), (std::vector<Money>{42, 27}));
  EXPECT_EQ(step.assignment.revenue, 234);

  // Continuing with product 1 moves on to (50,27).
  const std::vector<int> both = {1, 0};
  const Solution out = OptBased(inst_, grid_, in, both);
  EXPECT_EQ(Prices(out), (std::vector<Money>{50, 27}));
  EXPECT_EQ(out.assignment.revenue, 235);
}

TEST_F(Table1LocalSearch, OptBasedAtOptimum) {
  const Solution in = At(inst_, 50, 34);
  Rng rng(1);
  const Solution out = OptBased(inst_, grid_, in, rng);
  EXPECT_EQ(out.assignment.revenue, 236);
  EXPECT_EQ(out.prices, in.prices);
}

TEST(PipelineTest, Parse) {
  EXPECT_EQ(LocalSearchPipeline::Parse("sfrc").ToString(), "sfrc");
  EXPECT_TRUE(LocalSearchPipeline::Parse("-").empty());
  EXPECT_TRUE(LocalSearchPipeline::Parse("").empty());
  EXPECT_EQ(LocalSearchPipeline::Parse("o").steps()[0], LocalSearchStep::kOptBased);
  try {
    LocalSearchPipeline::Parse("sx");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
}

TEST_F(Table1LocalSearch, EmptyPipelineIsIdentity) {
  std::vector<Solution> batch = {At(inst_, 34, 34), At(inst_, 18, 66)};
  const std::vector<Solution> before = batch;
  Rng rng(3);
  RunPipeline(inst_, grid_, LocalSearchPipeline(), batch, rng);
  for (size_t j = 0; j < batch.size(); ++j) {
    EXPECT_EQ(batch[j].prices, before[j].prices);
  }
}

TEST_F(Table1LocalSearch, SfrcFromThirtyFour) {
  std::vector<Solution> batch = {At(inst_, 34, 34)};
  Rng rng(3);
  RunPipeline(inst_, grid_, LocalSearchPipeline::Parse("sfrc"), batch, rng);
  EXPECT_GE(batch[0].assignment.revenue, 228);
}

struct RandomState {
  Instance instance;
  BudgetGrid grid;
  Solution solution;
};

RandomState MakeRandomState(std::mt19937_64& gen) {
  Instance inst = testing::RandomInstance(gen, 5, 10, 40, 0.3);
  BudgetGrid grid = BuildGrid(inst);
  const std::vector<Money> prices = testing::RandomGridPrices(gen, inst);
  Solution s = MakeSolution(
      inst, grid, PriceVectorFromPrices(grid, prices, inst.num_products()));
  return {std::move(inst), std::move(grid), std::move(s)};
}

void ExpectConsistent(const Instance& inst, const BudgetGrid& grid,
                      const Solution& s) {
  ASSERT_TRUE(IsOnGrid(grid, s.prices));
  ASSERT_EQ(s.assignment, testing::AssignOracle(inst, RealizePrices(grid, s.prices)));
}

TEST(LocalSearchPropertyTest, SlackPreservesChoicesAndIsIdempotent) {
  std::mt19937_64 gen(17);
  for (int trial = 0; trial < 1000; ++trial) {
    const RandomState st = MakeRandomState(gen);
    const Solution out = Slack(st.instance, st.grid, st.solution);
    ASSERT_EQ(out.assignment.chosen, st.solution.assignment.chosen);
    ASSERT_GE(out.assignment.revenue, st.solution.assignment.revenue);
    ExpectConsistent(st.instance, st.grid, out);
    const Solution again = Slack(st.instance, st.grid, out);
    ASSERT_EQ(again.prices, out.prices);
  }
}

TEST(LocalSearchPropertyTest, EveryStepIsMonotoneAndConsistent) {
  std::mt19937_64 gen(23);
  for (int trial = 0; trial < 1000; ++trial) {
    const RandomState st = MakeRandomState(gen);
    const Instance& inst = st.instance;
    const BudgetGrid& grid = st.grid;
    const Solution slack = Slack(inst, grid, st.solution);
    Rng rng(trial);
    const Solution outs[] = {
        Fill(inst, grid, st.solution),
        Reassign(inst, grid, slack),
        ConditionalReassign(inst, grid, slack),
        OptBased(inst, grid, st.solution, rng),
    };
    for (const Solution& out : outs) {
      ExpectConsistent(inst, grid, out);
      ASSERT_GE(out.assignment.revenue,
                &out == &outs[0] || &out == &outs[3]
                    ? st.solution.assignment.revenue
                    : slack.assignment.revenue);
    }
  }
}

TEST(LocalSearchPropertyTest, OptBasedIsOneSwapOptimalPerProduct) {
  std::mt19937_64 gen(29);
  for (int trial = 0; trial < 500; ++trial) {
    const RandomState st = MakeRandomState(gen);
    const int i = static_cast<int>(gen() % st.instance.num_products());
    const std::vector<int> order = {i};
    const Solution out = OptBased(st.instance, st.grid, st.solution, order);
    for (int m = 0; m < st.grid.size(); ++m) {
      PriceVector p = out.prices;
      p[i] = m;
      ASSERT_LE(Assign(st.instance, st.grid, p).revenue, out.assignment.revenue);
    }
  }
}

TEST(LocalSearchPropertyTest, PipelinesAreMonotone) {
  std::mt19937_64 gen(31);
  const char* pipelines[] = {"s", "f", "r", "c", "o", "sfrc", "sfrco", "cr", "fs"};
  for (int trial = 0; trial < 300; ++trial) {
    const RandomState st = MakeRandomState(gen);
    for (const char* letters : pipelines) {
      std::vector<Solution> batch = {st.solution};
      Rng rng(trial);
      LocalSearchStats stats;
      RunPipeline(st.instance, st.grid, LocalSearchPipeline::Parse(letters),
                  batch, rng, &stats);
      ExpectConsistent(st.instance, st.grid, batch[0]);
      ASSERT_GE(batch[0].assignment.revenue, st.solution.assignment.revenue)
          << letters;
    }
  }
}

TEST(LocalSearchPropertyTest, ReassignRunsOnSlackFreePrices) {
  // "r" alone inserts the slack pass, so it matches "sr".
  std::mt19937_64 gen(37);
  for (int trial = 0; trial < 300; ++trial) {
    const RandomState st = MakeRandomState(gen);
    std::vector<Solution> a = {st.solution};
    std::vector<Solution> b = {st.solution};
    Rng rng_a(1), rng_b(1);
    RunPipeline(st.instance, st.grid, LocalSearchPipeline::Parse("r"), a, rng_a);
    RunPipeline(st.instance, st.grid, LocalSearchPipeline::Parse("sr"), b, rng_b);
    ASSERT_EQ(a[0].prices, b[0].prices);
  }
}

}  // namespace
}  // namespace rankprice
