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

// Closed-form follower response. Each customer buys the highest-ranked
// product whose price fits the budget, or nothing; rankings are strict, so
// that choice is unique and no per-customer optimization is needed.

#ifndef RANKPRICE_CORE_EVALUATOR_H_
#define RANKPRICE_CORE_EVALUATOR_H_

#include <cstdint>
#include <span>

#include "core/model.h"

namespace rankprice {

Assignment Assign(const Instance& instance, const BudgetGrid& grid,
                  const PriceVector& p);

// Same response for arbitrary non-negative prices (not necessarily budgets).
Assignment AssignPrices(const Instance& instance, std::span<const Money> prices);

// Number of price-vector evaluations charged to a search run.
struct EvalCount {
  std::int64_t evaluations = 0;
};

}  // namespace rankprice

#endif  // RANKPRICE_CORE_EVALUATOR_H_
