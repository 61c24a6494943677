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

// Improvement moves applied to freshly evaluated price vectors.
//
// Slack, fill, reassignment and conditional reassignment exploit the
// structure of the follower response: they only look at who buys what and at
// which budgets. The optimization-based move is the generic baseline that
// scans every grid value of every product.
//
// Every move takes a consistent (prices, assignment) pair and returns one
// whose revenue is at least the input revenue.

#ifndef RANKPRICE_CORE_LOCAL_SEARCH_H_
#define RANKPRICE_CORE_LOCAL_SEARCH_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "core/model.h"
#include "core/random.h"

namespace rankprice {

struct Solution {
  PriceVector prices;
  Assignment assignment;
};

Solution MakeSolution(const Instance& instance, const BudgetGrid& grid,
                      PriceVector prices);

struct LocalSearchStats {
  std::int64_t evaluations = 0;     // tentative re-evaluations
  std::int64_t fill_reverts = 0;
  std::int64_t fill_poaching = 0;   // kept fills that pulled assigned buyers
  std::int64_t reassign_reverts = 0;
  std::int64_t conditional_reverts = 0;
  std::int64_t opt_improvements = 0;

  LocalSearchStats& operator+=(const LocalSearchStats& other);
};

enum class LocalSearchStep : char {
  kSlack = 's',
  kFill = 'f',
  kReassign = 'r',
  kConditionalReassign = 'c',
  kOptBased = 'o',
};

class LocalSearchPipeline {
 public:
  LocalSearchPipeline() = default;
  explicit LocalSearchPipeline(std::vector<LocalSearchStep> steps)
      : steps_(std::move(steps)) {}

  // Letters from "sfrco"; "" and "-" mean no local search. Throws
  // kInvalidArgument on anything else.
  static LocalSearchPipeline Parse(std::string_view letters);

  std::span<const LocalSearchStep> steps() const { return steps_; }
  bool empty() const { return steps_.empty(); }
  std::string ToString() const;

 private:
  std::vector<LocalSearchStep> steps_;
};

// Raise every sold product to its poorest buyer's budget. Purchases are
// unchanged.
Solution Slack(const Instance& instance, const BudgetGrid& grid, Solution s);

// Price each unsold product at the smallest budget among the unassigned
// customers who would consider it; kept only on strict improvement.
Solution Fill(const Instance& instance, const BudgetGrid& grid, Solution s,
              LocalSearchStats* stats = nullptr);

// For products with two or more buyers, try the second-cheapest buyer budget
// as the price; kept only on strict improvement. Expects slack-free prices.
Solution Reassign(const Instance& instance, const BudgetGrid& grid, Solution s,
                  LocalSearchStats* stats = nullptr);

// Like Reassign, restricted to products whose poorest buyer has another
// acceptable product priced exactly at that buyer's budget.
Solution ConditionalReassign(const Instance& instance, const BudgetGrid& grid,
                             Solution s, LocalSearchStats* stats = nullptr);

// First-improvement scan over all grid values, visiting the listed products
// in the given order.
Solution OptBased(const Instance& instance, const BudgetGrid& grid, Solution s,
                  std::span<const int> product_order,
                  LocalSearchStats* stats = nullptr);

// Same, over all products in a uniformly random order.
Solution OptBased(const Instance& instance, const BudgetGrid& grid, Solution s,
                  Rng& rng, LocalSearchStats* stats = nullptr);

// Applies the steps in order to every element. Reassignment steps that are
// not preceded by a slack step get an implicit slack pass first.
void RunPipeline(const Instance& instance, const BudgetGrid& grid,
                 const LocalSearchPipeline& pipeline, std::span<Solution> batch,
                 Rng& rng, LocalSearchStats* stats = nullptr);

}  // namespace rankprice

#endif  // RANKPRICE_CORE_LOCAL_SEARCH_H_
