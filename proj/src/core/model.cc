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

#include "core/model.h"

#include <algorithm>
#include <sstream>

#include "core/status.h"

namespace rankprice {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kOk: return "Ok";
    case ErrorCode::kNonPositiveBudget: return "NonPositiveBudget";
    case ErrorCode::kTiedPreferences: return "TiedPreferences";
    case ErrorCode::kEmptyPreferenceRow: return "EmptyPreferenceRow";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kInvalidPreference: return "InvalidPreference";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kSearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorCode::kInvalidRange: return "InvalidRange";
    case ErrorCode::kInstanceRead: return "InstanceReadError";
    case ErrorCode::kOutputWrite: return "OutputWriteError";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kInternal: return "InternalError";
  }
  return "Unknown";
}

namespace {

[[noreturn]] void Fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

std::string At(int k, int i) {
  std::ostringstream os;
  os << "(customer " << k + 1 << ", product " << i + 1 << ")";
  return os.str();
}

}  // namespace

Instance Instance::Create(std::string name, int num_products,
                          int num_customers, std::vector<Money> budgets,
                          const std::vector<PreferenceRow>& preferences) {
  if (num_products <= 0 || num_customers <= 0) {
    Fail(ErrorCode::kDimensionMismatch,
         "num_products and num_customers must be positive");
  }
  if (static_cast<int>(budgets.size()) != num_customers) {
    Fail(ErrorCode::kDimensionMismatch,
         "budgets has " + std::to_string(budgets.size()) + " entries, expected " +
             std::to_string(num_customers));
  }
  if (static_cast<int>(preferences.size()) != num_customers) {
    Fail(ErrorCode::kDimensionMismatch,
         "preferences has " + std::to_string(preferences.size()) +
             " rows, expected " + std::to_string(num_customers));
  }

  Instance inst;
  inst.name_ = std::move(name);
  inst.num_products_ = num_products;
  inst.num_customers_ = num_customers;
  inst.scores_.assign(static_cast<size_t>(num_products) * num_customers,
                      kAbsent);
  inst.ranking_offsets_.reserve(num_customers + 1);
  inst.ranking_offsets_.push_back(0);

  for (int k = 0; k < num_customers; ++k) {
    if (budgets[k] <= 0) {
      Fail(ErrorCode::kNonPositiveBudget,
           "budget of customer " + std::to_string(k + 1) + " is " +
               std::to_string(budgets[k]) + ", must be positive");
    }
    const PreferenceRow& row = preferences[k];
    if (static_cast<int>(row.size()) != num_products) {
      Fail(ErrorCode::kDimensionMismatch,
           "preference row of customer " + std::to_string(k + 1) + " has " +
               std::to_string(row.size()) + " entries, expected " +
               std::to_string(num_products));
    }
    std::vector<int> available;
    for (int i = 0; i < num_products; ++i) {
      if (!row[i].has_value()) continue;
      if (*row[i] <= 0) {
        Fail(ErrorCode::kInvalidPreference,
             "preference " + At(k, i) + " is " + std::to_string(*row[i]) +
                 ", must be positive or null");
      }
      for (int j : available) {
        if (*row[j] == *row[i]) {
          Fail(ErrorCode::kTiedPreferences,
               "customer " + std::to_string(k + 1) + " ranks products " +
                   std::to_string(j + 1) + " and " + std::to_string(i + 1) +
                   " equally " + At(k, i));
        }
      }
      inst.scores_[static_cast<size_t>(k) * num_products + i] = *row[i];
      available.push_back(i);
    }
    if (available.empty()) {
      Fail(ErrorCode::kEmptyPreferenceRow,
           "customer " + std::to_string(k + 1) + " cannot buy any product");
    }
    std::sort(available.begin(), available.end(),
              [&row](int a, int b) { return *row[a] > *row[b]; });
    inst.ranked_.insert(inst.ranked_.end(), available.begin(),
                        available.end());
    inst.ranking_offsets_.push_back(inst.ranked_.size());
  }
  inst.budgets_ = std::move(budgets);
  return inst;
}

BudgetGrid::BudgetGrid(std::span<const Money> budgets)
    : values_(budgets.begin(), budgets.end()) {
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
}

std::optional<int> BudgetGrid::IndexOf(Money value) const {
  auto it = std::lower_bound(values_.begin(), values_.end(), value);
  if (it == values_.end() || *it != value) return std::nullopt;
  return static_cast<int>(it - values_.begin());
}

BudgetGrid BuildGrid(const Instance& instance) {
  return BudgetGrid(instance.budgets());
}

size_t PriceVectorHash::operator()(const PriceVector& p) const {
  // FNV-1a over the indices.
  size_t h = 1469598103934665603ULL;
  for (std::int32_t v : p.indices) {
    h ^= static_cast<size_t>(static_cast<std::uint32_t>(v));
    h *= 1099511628211ULL;
  }
  return h;
}

std::vector<Money> RealizePrices(const BudgetGrid& grid, const PriceVector& p) {
  std::vector<Money> prices(p.indices.size());
  for (size_t i = 0; i < prices.size(); ++i) prices[i] = grid.value(p.indices[i]);
  return prices;
}

PriceVector PriceVectorFromPrices(const BudgetGrid& grid,
                                  std::span<const Money> prices,
                                  int expected_size) {
  if (static_cast<int>(prices.size()) != expected_size) {
    throw Error(ErrorCode::kLengthMismatch,
                "expected " + std::to_string(expected_size) + " prices, got " +
                    std::to_string(prices.size()));
  }
  PriceVector p;
  p.indices.reserve(prices.size());
  for (size_t i = 0; i < prices.size(); ++i) {
    std::optional<int> m = grid.IndexOf(prices[i]);
    if (!m) {
      throw Error(ErrorCode::kInvalidArgument,
                  "price " + std::to_string(prices[i]) + " of product " +
                      std::to_string(i + 1) + " is not a customer budget");
    }
    p.indices.push_back(*m);
  }
  return p;
}

bool IsOnGrid(const BudgetGrid& grid, const PriceVector& p) {
  return std::all_of(p.indices.begin(), p.indices.end(), [&](std::int32_t m) {
    return m >= 0 && m < grid.size();
  });
}

std::string FormatPrices(std::span<const Money> prices) {
  std::string out;
  for (size_t i = 0; i < prices.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(prices[i]);
  }
  return out;
}

}  // namespace rankprice
