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

#include "core/local_search.h"

#include <algorithm>
#include <limits>
#include <numeric>

#include "core/evaluator.h"
#include "core/status.h"

namespace rankprice {

namespace {

// Buyers of each product under the current assignment, ascending customer
// index.
std::vector<std::vector<int>> BuyersByProduct(const Instance& instance,
                                              const Assignment& a) {
  std::vector<std::vector<int>> buyers(instance.num_products());
  for (int k = 0; k < instance.num_customers(); ++k) {
    if (a.chosen[k] != kNoProduct) buyers[a.chosen[k]].push_back(k);
  }
  return buyers;
}

std::vector<int> BuyersOf(const Assignment& a, int product) {
  std::vector<int> out;
  for (int k = 0; k < static_cast<int>(a.chosen.size()); ++k) {
    if (a.chosen[k] == product) out.push_back(k);
  }
  return out;
}

int GridIndex(const BudgetGrid& grid, Money budget) {
  // Budgets are grid members by construction.
  return *grid.IndexOf(budget);
}

// Sets product to new_index, re-evaluates, keeps on strict improvement.
bool TryPrice(const Instance& instance, const BudgetGrid& grid, Solution& s,
              int product, int new_index, LocalSearchStats* stats) {
  const std::int32_t old_index = s.prices[product];
  s.prices[product] = new_index;
  Assignment trial = Assign(instance, grid, s.prices);
  if (stats) ++stats->evaluations;
  if (trial.revenue > s.assignment.revenue) {
    s.assignment = std::move(trial);
    return true;
  }
  s.prices[product] = old_index;
  return false;
}

// Budget of the second-poorest buyer (counting repeated budgets), or -1.
Money SecondCheapestBudget(const Instance& instance,
                           const std::vector<int>& buyers) {
  if (buyers.size() < 2) return -1;
  std::vector<Money> budgets;
  budgets.reserve(buyers.size());
  for (int k : buyers) budgets.push_back(instance.budget(k));
  std::nth_element(budgets.begin(), budgets.begin() + 1, budgets.end());
  return budgets[1];
}

}  // namespace

Solution MakeSolution(const Instance& instance, const BudgetGrid& grid,
                      PriceVector prices) {
  Solution s{std::move(prices), {}};
  s.assignment = Assign(instance, grid, s.prices);
  return s;
}

LocalSearchStats& LocalSearchStats::operator+=(const LocalSearchStats& other) {
  evaluations += other.evaluations;
  fill_reverts += other.fill_reverts;
  fill_poaching += other.fill_poaching;
  reassign_reverts += other.reassign_reverts;
  conditional_reverts += other.conditional_reverts;
  opt_improvements += other.opt_improvements;
  return *this;
}

LocalSearchPipeline LocalSearchPipeline::Parse(std::string_view letters) {
  std::vector<LocalSearchStep> steps;
  if (letters == "-" || letters == "none") return LocalSearchPipeline();
  for (char c : letters) {
    switch (c) {
      case 's':
      case 'f':
      case 'r':
      case 'c':
      case 'o':
        steps.push_back(static_cast<LocalSearchStep>(c));
        break;
      default:
        throw Error(ErrorCode::kInvalidArgument,
                    std::string("unknown local search letter '") + c +
                        "' (expected letters from \"sfrco\")");
    }
  }
  return LocalSearchPipeline(std::move(steps));
}

std::string LocalSearchPipeline::ToString() const {
  std::string out;
  for (LocalSearchStep step : steps_) out += static_cast<char>(step);
  return out;
}

Solution Slack(const Instance& instance, const BudgetGrid& grid, Solution s) {
  const auto buyers = BuyersByProduct(instance, s.assignment);
  for (int i = 0; i < instance.num_products(); ++i) {
    if (buyers[i].empty()) continue;
    Money poorest = std::numeric_limits<Money>::max();
    for (int k : buyers[i]) poorest = std::min(poorest, instance.budget(k));
    s.prices[i] = GridIndex(grid, poorest);
  }
  // Raising a price up to every buyer's budget leaves all choices intact,
  // so only the revenue needs recomputing.
  Money revenue = 0;
  for (int product : s.assignment.chosen) {
    if (product != kNoProduct) revenue += grid.value(s.prices[product]);
  }
  s.assignment.revenue = revenue;
  return s;
}

Solution Fill(const Instance& instance, const BudgetGrid& grid, Solution s,
              LocalSearchStats* stats) {
  for (int i = 0; i < instance.num_products(); ++i) {
    if (std::find(s.assignment.chosen.begin(), s.assignment.chosen.end(), i) !=
        s.assignment.chosen.end()) {
      continue;
    }
    Money target = std::numeric_limits<Money>::max();
    for (int k = 0; k < instance.num_customers(); ++k) {
      if (s.assignment.chosen[k] == kNoProduct && instance.available(k, i)) {
        target = std::min(target, instance.budget(k));
      }
    }
    if (target == std::numeric_limits<Money>::max()) continue;
    const int index = GridIndex(grid, target);
    if (index == s.prices[i]) continue;

    const std::vector<int> before = s.assignment.chosen;
    if (TryPrice(instance, grid, s, i, index, stats)) {
      if (stats) {
        for (size_t k = 0; k < before.size(); ++k) {
          if (before[k] != kNoProduct && s.assignment.chosen[k] == i) {
            ++stats->fill_poaching;
            break;
          }
        }
      }
    } else if (stats) {
      ++stats->fill_reverts;
    }
  }
  return s;
}

Solution Reassign(const Instance& instance, const BudgetGrid& grid, Solution s,
                  LocalSearchStats* stats) {
  for (int i = 0; i < instance.num_products(); ++i) {
    const Money second = SecondCheapestBudget(instance, BuyersOf(s.assignment, i));
    if (second < 0) continue;
    const int index = GridIndex(grid, second);
    if (index == s.prices[i]) continue;
    if (!TryPrice(instance, grid, s, i, index, stats) && stats) {
      ++stats->reassign_reverts;
    }
  }
  return s;
}

Solution ConditionalReassign(const Instance& instance, const BudgetGrid& grid,
                             Solution s, LocalSearchStats* stats) {
  for (int i = 0; i < instance.num_products(); ++i) {
    const std::vector<int> buyers = BuyersOf(s.assignment, i);
    if (buyers.size() < 2) continue;
    int poorest = buyers.front();
    for (int k : buyers) {
      if (instance.budget(k) < instance.budget(poorest)) poorest = k;
    }
    const Money floor = instance.budget(poorest);
    if (grid.value(s.prices[i]) != floor) continue;

    bool has_fallback = false;
    for (int j = 0; j < instance.num_products() && !has_fallback; ++j) {
      has_fallback = j != i && grid.value(s.prices[j]) == floor &&
                     instance.available(poorest, j);
    }
    if (!has_fallback) continue;

    const int index = GridIndex(grid, SecondCheapestBudget(instance, buyers));
    if (index == s.prices[i]) continue;
    if (!TryPrice(instance, grid, s, i, index, stats) && stats) {
      ++stats->conditional_reverts;
    }
  }
  return s;
}

Solution OptBased(const Instance& instance, const BudgetGrid& grid, Solution s,
                  std::span<const int> product_order, LocalSearchStats* stats) {
  for (int i : product_order) {
    for (int m = 0; m < grid.size(); ++m) {
      if (m == s.prices[i]) continue;
      if (TryPrice(instance, grid, s, i, m, stats) && stats) {
        ++stats->opt_improvements;
      }
    }
  }
  return s;
}

Solution OptBased(const Instance& instance, const BudgetGrid& grid, Solution s,
                  Rng& rng, LocalSearchStats* stats) {
  std::vector<int> order(instance.num_products());
  std::iota(order.begin(), order.end(), 0);
  rng.Shuffle(std::span<int>(order));
  return OptBased(instance, grid, std::move(s), order, stats);
}

void RunPipeline(const Instance& instance, const BudgetGrid& grid,
                 const LocalSearchPipeline& pipeline, std::span<Solution> batch,
                 Rng& rng, LocalSearchStats* stats) {
  if (pipeline.empty()) return;
  for (Solution& s : batch) {
    bool slack_applied = false;
    for (LocalSearchStep step : pipeline.steps()) {
      switch (step) {
        case LocalSearchStep::kSlack:
          s = Slack(instance, grid, std::move(s));
          slack_applied = true;
          break;
        case LocalSearchStep::kFill:
          s = Fill(instance, grid, std::move(s), stats);
          break;
        case LocalSearchStep::kReassign:
          if (!slack_applied) {
            s = Slack(instance, grid, std::move(s));
            slack_applied = true;
          }
          s = Reassign(instance, grid, std::move(s), stats);
          break;
        case LocalSearchStep::kConditionalReassign:
          if (!slack_applied) {
            s = Slack(instance, grid, std::move(s));
            slack_applied = true;
          }
          s = ConditionalReassign(instance, grid, std::move(s), stats);
          break;
        case LocalSearchStep::kOptBased:
          s = OptBased(instance, grid, std::move(s), rng, stats);
          break;
      }
    }
  }
}

}  // namespace rankprice
