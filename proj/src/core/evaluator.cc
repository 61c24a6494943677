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

#include "core/evaluator.h"

#include <cassert>

namespace rankprice {

namespace {

template <typename PriceOf>
Assignment AssignWith(const Instance& instance, PriceOf price_of) {
  Assignment a;
  a.chosen.assign(instance.num_customers(), kNoProduct);
  for (int k = 0; k < instance.num_customers(); ++k) {
    const Money budget = instance.budget(k);
    for (int i : instance.ranking(k)) {
      const Money price = price_of(i);
      if (price <= budget) {
        a.chosen[k] = i;
        a.revenue += price;
        break;
      }
    }
  }
  return a;
}

}  // namespace

Assignment Assign(const Instance& instance, const BudgetGrid& grid,
                  const PriceVector& p) {
  assert(p.size() == instance.num_products());
  return AssignWith(instance, [&](int i) { return grid.value(p[i]); });
}

Assignment AssignPrices(const Instance& instance,
                        std::span<const Money> prices) {
  assert(static_cast<int>(prices.size()) == instance.num_products());
  return AssignWith(instance, [&](int i) { return prices[i]; });
}

}  // namespace rankprice
