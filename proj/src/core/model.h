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

// Problem data for rank pricing: customers with budgets and strict rankings
// over the products they are willing to buy, plus the discrete price space
// spanned by the distinct budgets.

#ifndef RANKPRICE_CORE_MODEL_H_
#define RANKPRICE_CORE_MODEL_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rankprice {

using Money = std::int64_t;
using Score = std::int32_t;

// Sentinel for a product a customer will never buy.
inline constexpr Score kAbsent = 0;
// Sentinel for "customer buys nothing" in an Assignment.
inline constexpr int kNoProduct = -1;

// Raw preference matrix entry: nullopt means the product is unavailable to
// that customer.
using PreferenceRow = std::vector<std::optional<Score>>;

class Instance {
 public:
  // Validates and builds an instance. Throws Error with kDimensionMismatch,
  // kNonPositiveBudget, kInvalidPreference, kTiedPreferences or
  // kEmptyPreferenceRow; messages name the offending customer/product
  // (1-based).
  static Instance Create(std::string name, int num_products, int num_customers,
                         std::vector<Money> budgets,
                         const std::vector<PreferenceRow>& preferences);

  const std::string& name() const { return name_; }
  int num_products() const { return num_products_; }
  int num_customers() const { return num_customers_; }

  Money budget(int customer) const { return budgets_[customer]; }
  std::span<const Money> budgets() const { return budgets_; }

  // kAbsent when the customer cannot buy the product.
  Score score(int customer, int product) const {
    return scores_[static_cast<size_t>(customer) * num_products_ + product];
  }
  bool available(int customer, int product) const {
    return score(customer, product) != kAbsent;
  }

  // Products the customer may buy, most preferred first.
  std::span<const int> ranking(int customer) const {
    return {ranked_.data() + ranking_offsets_[customer],
            ranked_.data() + ranking_offsets_[customer + 1]};
  }

 private:
  Instance() = default;

  std::string name_;
  int num_products_ = 0;
  int num_customers_ = 0;
  std::vector<Money> budgets_;
  std::vector<Score> scores_;  // row-major K x I
  std::vector<int> ranked_;
  std::vector<size_t> ranking_offsets_;
};

// Sorted distinct budgets. Grid indices are 0-based in code; the 1-based
// numbering only appears in exported LP models.
class BudgetGrid {
 public:
  explicit BudgetGrid(std::span<const Money> budgets);

  int size() const { return static_cast<int>(values_.size()); }
  Money value(int index) const { return values_[index]; }
  std::span<const Money> values() const { return values_; }
  Money max_value() const { return values_.back(); }

  std::optional<int> IndexOf(Money value) const;

 private:
  std::vector<Money> values_;
};

BudgetGrid BuildGrid(const Instance& instance);

// One grid index per product.
struct PriceVector {
  std::vector<std::int32_t> indices;

  int size() const { return static_cast<int>(indices.size()); }
  std::int32_t& operator[](int i) { return indices[i]; }
  std::int32_t operator[](int i) const { return indices[i]; }

  friend bool operator==(const PriceVector&, const PriceVector&) = default;
  friend auto operator<=>(const PriceVector&, const PriceVector&) = default;
};

struct PriceVectorHash {
  size_t operator()(const PriceVector& p) const;
};

std::vector<Money> RealizePrices(const BudgetGrid& grid, const PriceVector& p);

// Maps raw prices onto the grid; throws kInvalidArgument for off-grid values
// and kLengthMismatch if the length differs from expected_size.
PriceVector PriceVectorFromPrices(const BudgetGrid& grid,
                                  std::span<const Money> prices,
                                  int expected_size);

bool IsOnGrid(const BudgetGrid& grid, const PriceVector& p);

struct Assignment {
  std::vector<int> chosen;  // per customer, kNoProduct if nothing bought
  Money revenue = 0;

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

// "v1,v2,..." for logs and CSV cells.
std::string FormatPrices(std::span<const Money> prices);

}  // namespace rankprice

#endif  // RANKPRICE_CORE_MODEL_H_
