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
#include "core/model.h"
#include "support/oracles.h"

namespace rankprice {
namespace {

using testing::AssignOracle;
using testing::Table1;

Money Revenue(const Instance& inst, std::vector<Money> prices) {
  return AssignPrices(inst, prices).revenue;
}

struct Spot {
  Money p1;
  Money p2;
  Money revenue;
};

// Hand-checked against the customer table: revenue grid for the eight-customer example.
TEST(AssignTest, Table1SpotValues) {
  const Instance inst = Table1();
  for (const Spot& s : {Spot{50, 34, 236}, Spot{34, 34, 204}, Spot{18, 27, 180},
                        Spot{42, 42, 210}, Spot{42, 34, 228}, Spot{50, 42, 226},
                        Spot{42, 27, 234}, Spot{50, 50, 150}, Spot{66, 66, 132},
                        Spot{34, 66, 236}, Spot{66, 34, 236}}) {
    EXPECT_EQ(Revenue(inst, {s.p1, s.p2}), s.revenue) << s.p1 << "," << s.p2;
  }
}

TEST(AssignTest, FiftyFiftyInExpectedBand) {
  const Money r = Revenue(Table1(), {50, 50});
  EXPECT_GE(r, 130);
  EXPECT_LE(r, 152);
}

TEST(AssignTest, BuyersAtThirtyFour) {
  const Assignment a = AssignPrices(Table1(), std::vector<Money>{34, 34});
  std::vector<int> product1;
  for (int k = 0; k < 8; ++k) {
    if (a.chosen[k] == 0) product1.push_back(k + 1);
  }
  EXPECT_EQ(product1, (std::vector<int>{2, 6, 7}));
  EXPECT_EQ(a.revenue, 3 * 34 + 3 * 34);
}

TEST(AssignTest, FillInstanceSpot) {
  EXPECT_EQ(Revenue(testing::Table1Fill(), {66, 18}), 240);
}

TEST(AssignTest, NothingAffordable) {
  const Assignment a = AssignPrices(Table1(), std::vector<Money>{67, 100});
  EXPECT_EQ(a.revenue, 0);
  for (int c : a.chosen) EXPECT_EQ(c, kNoProduct);
}

TEST(AssignTest, SingleCustomerSingleProduct) {
  const Instance inst = Instance::Create("one", 1, 1, {10}, {{1}});
  const Assignment a = AssignPrices(inst, std::vector<Money>{10});
  EXPECT_EQ(a.chosen, std::vector<int>{0});
  EXPECT_EQ(a.revenue, 10);
}

TEST(AssignTest, GridAndPricePathsAgree) {
  const Instance inst = Table1();
  const BudgetGrid grid = BuildGrid(inst);
  for (int a = 0; a < grid.size(); ++a) {
    for (int b = 0; b < grid.size(); ++b) {
      const PriceVector p{{a, b}};
      EXPECT_EQ(Assign(inst, grid, p), AssignPrices(inst, RealizePrices(grid, p)));
    }
  }
}

TEST(AssignPropertyTest, MatchesOracleOnRandomPairs) {
  std::mt19937_64 gen(20260101);
  for (int trial = 0; trial < 3000; ++trial) {
    const Instance inst = testing::RandomInstance(gen, 8, 12, 60, 0.25);
    const BudgetGrid grid = BuildGrid(inst);
    const std::vector<Money> prices = testing::RandomGridPrices(gen, inst);
    const PriceVector p = PriceVectorFromPrices(grid, prices, inst.num_products());
    ASSERT_EQ(Assign(inst, grid, p), AssignOracle(inst, prices)) << trial;
  }
}

TEST(AssignPropertyTest, StructuralInvariants) {
  std::mt19937_64 gen(99);
  for (int trial = 0; trial < 2000; ++trial) {
    const Instance inst = testing::RandomInstance(gen, 6, 10, 50, 0.3);
    std::vector<Money> prices(inst.num_products());
    for (Money& v : prices) v = 1 + static_cast<Money>(gen() % 60);
    const Assignment a = AssignPrices(inst, prices);
    Money total = 0;
    for (int k = 0; k < inst.num_customers(); ++k) {
      const int i = a.chosen[k];
      if (i == kNoProduct) {
        // Nothing affordable and acceptable.
        for (int j = 0; j < inst.num_products(); ++j) {
          ASSERT_FALSE(inst.available(k, j) && prices[j] <= inst.budget(k));
        }
        continue;
      }
      ASSERT_TRUE(inst.available(k, i));
      ASSERT_LE(prices[i], inst.budget(k));
      for (int j = 0; j < inst.num_products(); ++j) {
        if (inst.score(k, j) > inst.score(k, i)) {
          ASSERT_GT(prices[j], inst.budget(k));
        }
      }
      total += prices[i];
    }
    ASSERT_EQ(total, a.revenue);

    // Raising one price never moves customers who were not buying it.
    const int raised = static_cast<int>(gen() % inst.num_products());
    std::vector<Money> higher = prices;
    higher[raised] += 1 + static_cast<Money>(gen() % 20);
    const Assignment b = AssignPrices(inst, higher);
    for (int k = 0; k < inst.num_customers(); ++k) {
      if (a.chosen[k] != raised) {
        ASSERT_EQ(b.chosen[k], a.chosen[k]);
      }
    }
  }
}

}  // namespace
}  // namespace rankprice
