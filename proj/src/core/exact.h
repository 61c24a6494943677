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

#ifndef RANKPRICE_CORE_EXACT_H_
#define RANKPRICE_CORE_EXACT_H_

#include <cstdint>
#include <string>
#include <vector>

#include "core/model.h"

namespace rankprice {

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

struct ExactResult {
  Money optimum = 0;
  std::vector<PriceVector> optima;  // lexicographic
  std::uint64_t evaluated = 0;
};

// Number of grid vectors M^I, saturating at UINT64_MAX.
std::uint64_t SearchSpaceSize(const Instance& instance, const BudgetGrid& grid);

// Evaluates every grid vector. Throws kSearchSpaceTooLarge when M^I > cap.
// workers > 1 splits the space by the first product's price; the merged
// result does not depend on the worker count.
ExactResult BruteForce(const Instance& instance, const BudgetGrid& grid,
                       std::uint64_t cap = kDefaultEnumerationCap,
                       int workers = 1);

// Single-level binary model with a quadratic objective:
//   max   sum_{k,i,m} b_m v_i_m x_i_k
//   onep_i:   sum_m v_i_m <= 1
//   onec_k:   sum_i x_i_k <= 1
//   link_k_i: x_i_k <= sum_{m : b_m <= b_k} v_i_m
//   pref_k_i: sum_j s_jk x_j_k >= s_ik sum_{m : b_m <= b_k} v_i_m
// Unavailable (k, i) pairs fix x_i_k = 0 and drop pref_k_i.
struct LinearTerm {
  std::int64_t coefficient;
  std::string variable;
};

struct QuadraticTerm {
  std::int64_t coefficient;
  std::string first;
  std::string second;
};

struct Row {
  enum class Sense { kLessEqual, kGreaterEqual };
  std::string name;
  std::vector<LinearTerm> terms;
  Sense sense;
  std::int64_t rhs;
};

struct MilpModel {
  std::vector<std::string> v_vars;   // (i, m) ascending
  std::vector<std::string> x_vars;   // (i, k) ascending
  std::vector<QuadraticTerm> objective;
  std::vector<Row> one_price_rows;   // onep
  std::vector<Row> one_choice_rows;  // onec
  std::vector<Row> link_rows;        // link, (k, i) ascending
  std::vector<Row> preference_rows;  // pref, (k, i) ascending
  std::vector<std::string> fixed_to_zero;
};

MilpModel BuildSingleLevelModel(const Instance& instance, const BudgetGrid& grid);

// CPLEX LP text. Byte-stable for a given instance.
std::string ToLpFormat(const MilpModel& model, const std::string& title);

std::string ExportSingleLevel(const Instance& instance, const BudgetGrid& grid);

}  // namespace rankprice

#endif  // RANKPRICE_CORE_EXACT_H_
