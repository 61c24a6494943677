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

// Population-based searches over the budget grid: uniform sampling, variable
// neighborhood search and a genetic algorithm.
//
// All three keep a growing population of evaluated price vectors. After an
// initial batch of l0 vectors, each iteration generates a batch of t new
// vectors (from the q best members for VNS and genetic), evaluates them,
// optionally improves them with a local-search pipeline, and appends them.
// A point budget counts every vector appended to the population, including
// the initial batch.

#ifndef RANKPRICE_CORE_HEURISTICS_H_
#define RANKPRICE_CORE_HEURISTICS_H_

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "core/evaluator.h"
#include "core/local_search.h"
#include "core/model.h"
#include "core/random.h"

namespace rankprice {

enum class Method { kNaive, kVns, kGenetic };
enum class InitKind { kRandom, kGreedy };

Method ParseMethod(std::string_view name);
InitKind ParseInitKind(std::string_view name);
const char* MethodName(Method method);
const char* InitKindName(InitKind init);

struct StopRule {
  enum class Kind { kPointBudget, kTimeLimit, kIterations };

  static StopRule Points(std::int64_t max_points) {
    return {Kind::kPointBudget, max_points, 0.0};
  }
  static StopRule Seconds(double seconds) {
    return {Kind::kTimeLimit, 0, seconds};
  }
  static StopRule Iterations(std::int64_t iterations) {
    return {Kind::kIterations, iterations, 0.0};
  }

  Kind kind = Kind::kPointBudget;
  std::int64_t limit = 24000;  // points or iterations
  double seconds = 0.0;
};

struct SearchParams {
  int l0 = 1000;
  int q = 100;
  int t = 500;
  StopRule stop;
  InitKind init = InitKind::kRandom;
  std::uint64_t seed = 0;
  LocalSearchPipeline pipeline;

  // Reset the VNS radius to 1 after an improving iteration.
  bool vns_reset_radius = false;
  // Allow the genetic search to pick the same elite as both parents.
  bool parents_with_replacement = false;
  // Drop generated vectors already present in the population; the point
  // budget then counts distinct vectors and is capped at the grid size.
  bool dedup = false;
  // When non-empty, replaces the generated initial population.
  std::vector<PriceVector> initial_population;

  // Throws kInvalidArgument.
  void Validate(Method method, const Instance& instance,
                const BudgetGrid& grid) const;
};

// Default (l0, q, t) per method.
SearchParams DefaultParams(Method method);

struct TracePoint {
  std::int64_t evals = 0;
  double elapsed_ms = 0.0;
  Money best_value = 0;

  friend bool operator==(const TracePoint&, const TracePoint&) = default;
};

struct PopulationMember {
  PriceVector prices;
  Money revenue = 0;
};

struct SearchState {
  std::vector<PopulationMember> population;  // insertion order
  std::vector<int> elites;  // population indices, best first; ties by age
  int best_index = -1;
  Money best_value = 0;
  int radius = 1;
  EvalCount evals;
  std::int64_t iterations = 0;
  std::vector<TracePoint> trace;
  LocalSearchStats local_search;
};

// Called once after initialization and once after every iteration.
using SearchObserver = std::function<void(const SearchState&)>;

struct SearchResult {
  PriceVector best_prices;
  Money best_value = 0;
  std::vector<TracePoint> trace;
  EvalCount evals;
  std::int64_t iterations = 0;
  double elapsed_ms = 0.0;
  LocalSearchStats local_search;
};

PriceVector RandomPrice(const BudgetGrid& grid, int num_products, Rng& rng);

// Richest customers first (ties by index): each prices its favourite
// still-unpriced product at its own budget. Leftovers get the top budget.
PriceVector GreedyInit(const Instance& instance, const BudgetGrid& grid);

// The index box {q : |q_i - p_i| <= r} clipped to the grid.
class NeighborhoodBox {
 public:
  NeighborhoodBox(const BudgetGrid& grid, const PriceVector& center,
                  int radius);

  bool Contains(const PriceVector& p) const;
  // Number of points, saturating at UINT64_MAX.
  std::uint64_t Size() const;
  PriceVector Sample(Rng& rng) const;
  // Lexicographic order. Only for small boxes.
  std::vector<PriceVector> Enumerate() const;

  std::span<const std::int32_t> lower() const { return lower_; }
  std::span<const std::int32_t> upper() const { return upper_; }

 private:
  std::vector<std::int32_t> lower_;
  std::vector<std::int32_t> upper_;
};

NeighborhoodBox Neighborhood(const BudgetGrid& grid, const PriceVector& p,
                             int radius);

// Uniform crossover. Throws kLengthMismatch.
PriceVector Crossover(const PriceVector& first, const PriceVector& second,
                      Rng& rng);

// Each component is, with probability 1/I, replaced by a uniformly chosen
// different grid value.
PriceVector Mutate(const BudgetGrid& grid, const PriceVector& p, Rng& rng);

SearchResult NaiveSearch(const Instance& instance, const BudgetGrid& grid,
                         const SearchParams& params, Rng& rng,
                         const SearchObserver& observer = {});
SearchResult VnsSearch(const Instance& instance, const BudgetGrid& grid,
                       const SearchParams& params, Rng& rng,
                       const SearchObserver& observer = {});
SearchResult GeneticSearch(const Instance& instance, const BudgetGrid& grid,
                           const SearchParams& params, Rng& rng,
                           const SearchObserver& observer = {});

// Validates params and runs the method with an Rng seeded from params.seed.
SearchResult RunSearch(Method method, const Instance& instance,
                       const BudgetGrid& grid, const SearchParams& params,
                       const SearchObserver& observer = {});

}  // namespace rankprice

#endif  // RANKPRICE_CORE_HEURISTICS_H_
