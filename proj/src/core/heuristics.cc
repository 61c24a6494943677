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

#include "core/heuristics.h"

#include <algorithm>
#include <chrono>
#include <unordered_set>

#include "core/status.h"

namespace rankprice {

Method ParseMethod(std::string_view name) {
  if (name == "naive") return Method::kNaive;
  if (name == "vns") return Method::kVns;
  if (name == "genetic" || name == "gen") return Method::kGenetic;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown method '" + std::string(name) +
                  "' (expected naive, vns or genetic)");
}

InitKind ParseInitKind(std::string_view name) {
  if (name == "random") return InitKind::kRandom;
  if (name == "greedy") return InitKind::kGreedy;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown init '" + std::string(name) +
                  "' (expected random or greedy)");
}

const char* MethodName(Method method) {
  switch (method) {
    case Method::kNaive: return "naive";
    case Method::kVns: return "vns";
    case Method::kGenetic: return "genetic";
  }
  return "?";
}

const char* InitKindName(InitKind init) {
  return init == InitKind::kGreedy ? "greedy" : "random";
}

SearchParams DefaultParams(Method method) {
  SearchParams params;
  params.l0 = 1000;
  params.q = method == Method::kGenetic ? 1000 : 100;
  params.t = 500;
  return params;
}

void SearchParams::Validate(Method method, const Instance& instance,
                            const BudgetGrid& grid) const {
  auto fail = [](const std::string& message) {
    throw Error(ErrorCode::kInvalidArgument, message);
  };
  const int initial = initial_population.empty()
                          ? l0
                          : static_cast<int>(initial_population.size());
  if (initial < 1) fail("l0 must be positive");
  if (t < 1) fail("t must be positive");
  if (q < 1) fail("q must be positive");
  if (method != Method::kNaive && q > initial) {
    fail("q (" + std::to_string(q) + ") must not exceed l0 (" +
         std::to_string(initial) + ")");
  }
  if (method == Method::kGenetic && q < 2) fail("genetic search needs q >= 2");
  switch (stop.kind) {
    case StopRule::Kind::kPointBudget:
      if (stop.limit < 1) fail("point budget must be positive");
      break;
    case StopRule::Kind::kIterations:
      if (stop.limit < 0) fail("iteration count must be non-negative");
      break;
    case StopRule::Kind::kTimeLimit:
      if (!(stop.seconds > 0.0)) fail("time limit must be positive");
      break;
  }
  for (const PriceVector& p : initial_population) {
    if (p.size() != instance.num_products()) {
      throw Error(ErrorCode::kLengthMismatch,
                  "initial price vector has the wrong length");
    }
    if (!IsOnGrid(grid, p)) fail("initial price vector is off the grid");
  }
}

PriceVector RandomPrice(const BudgetGrid& grid, int num_products, Rng& rng) {
  PriceVector p;
  p.indices.resize(num_products);
  for (auto& m : p.indices) {
    m = static_cast<std::int32_t>(rng.Uniform(grid.size()));
  }
  return p;
}

PriceVector GreedyInit(const Instance& instance, const BudgetGrid& grid) {
  std::vector<int> customers(instance.num_customers());
  for (int k = 0; k < instance.num_customers(); ++k) customers[k] = k;
  std::stable_sort(customers.begin(), customers.end(), [&](int a, int b) {
    return instance.budget(a) > instance.budget(b);
  });

  constexpr std::int32_t kUnpriced = -1;
  PriceVector p;
  p.indices.assign(instance.num_products(), kUnpriced);
  for (int k : customers) {
    for (int i : instance.ranking(k)) {
      if (p[i] == kUnpriced) {
        p[i] = *grid.IndexOf(instance.budget(k));
        break;
      }
    }
  }
  for (auto& m : p.indices) {
    if (m == kUnpriced) m = grid.size() - 1;
  }
  return p;
}

NeighborhoodBox::NeighborhoodBox(const BudgetGrid& grid,
                                 const PriceVector& center, int radius) {
  lower_.resize(center.size());
  upper_.resize(center.size());
  const std::int32_t top = grid.size() - 1;
  for (int i = 0; i < center.size(); ++i) {
    lower_[i] = std::max<std::int32_t>(0, center[i] - radius);
    upper_[i] = std::min<std::int32_t>(top, center[i] + radius);
  }
}

bool NeighborhoodBox::Contains(const PriceVector& p) const {
  if (p.size() != static_cast<int>(lower_.size())) return false;
  for (int i = 0; i < p.size(); ++i) {
    if (p[i] < lower_[i] || p[i] > upper_[i]) return false;
  }
  return true;
}

std::uint64_t NeighborhoodBox::Size() const {
  std::uint64_t size = 1;
  for (size_t i = 0; i < lower_.size(); ++i) {
    const std::uint64_t width = upper_[i] - lower_[i] + 1;
    if (size > UINT64_MAX / width) return UINT64_MAX;
    size *= width;
  }
  return size;
}

PriceVector NeighborhoodBox::Sample(Rng& rng) const {
  PriceVector p;
  p.indices.resize(lower_.size());
  for (size_t i = 0; i < lower_.size(); ++i) {
    p.indices[i] = static_cast<std::int32_t>(rng.UniformInt(lower_[i], upper_[i]));
  }
  return p;
}

std::vector<PriceVector> NeighborhoodBox::Enumerate() const {
  std::vector<PriceVector> out;
  PriceVector p{lower_};
  while (true) {
    out.push_back(p);
    int i = p.size() - 1;
    while (i >= 0 && p[i] == upper_[i]) {
      p[i] = lower_[i];
      --i;
    }
    if (i < 0) break;
    ++p[i];
  }
  return out;
}

NeighborhoodBox Neighborhood(const BudgetGrid& grid, const PriceVector& p,
                             int radius) {
  return NeighborhoodBox(grid, p, radius);
}

PriceVector Crossover(const PriceVector& first, const PriceVector& second,
                      Rng& rng) {
  if (first.size() != second.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "crossover parents have lengths " + std::to_string(first.size()) +
                    " and " + std::to_string(second.size()));
  }
  PriceVector child = first;
  for (int i = 0; i < child.size(); ++i) {
    if (!rng.Bernoulli(0.5)) child[i] = second[i];
  }
  return child;
}

PriceVector Mutate(const BudgetGrid& grid, const PriceVector& p, Rng& rng) {
  PriceVector out = p;
  const double rate = 1.0 / static_cast<double>(p.size());
  const std::uint64_t m = grid.size();
  for (int i = 0; i < out.size(); ++i) {
    if (!rng.Bernoulli(rate) || m < 2) continue;
    auto next = static_cast<std::int32_t>(rng.Uniform(m - 1));
    if (next >= out[i]) ++next;
    out[i] = next;
  }
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

// Shared bookkeeping of the population searches.
class PopulationSearch {
 public:
  PopulationSearch(const Instance& instance, const BudgetGrid& grid,
                   const SearchParams& params, Rng& rng,
                   const SearchObserver& observer, bool track_elites)
      : instance_(instance),
        grid_(grid),
        params_(params),
        rng_(rng),
        observer_(observer),
        track_elites_(track_elites),
        start_(Clock::now()) {
    point_limit_ = params.stop.limit;
    if (params.dedup) {
      std::uint64_t space = 1;
      for (int i = 0; i < instance.num_products(); ++i) {
        if (space > UINT64_MAX / grid.size()) {
          space = UINT64_MAX;
          break;
        }
        space *= grid.size();
      }
      if (space < static_cast<std::uint64_t>(point_limit_)) {
        point_limit_ = static_cast<std::int64_t>(space);
      }
    }
  }

  SearchState& state() { return state_; }

  void Initialize() {
    std::vector<PriceVector> initial = params_.initial_population;
    if (initial.empty()) {
      std::int64_t count = params_.l0;
      if (params_.stop.kind == StopRule::Kind::kPointBudget) {
        count = std::min(count, point_limit_);
      }
      initial.reserve(count);
      if (params_.init == InitKind::kGreedy && count > 0) {
        initial.push_back(GreedyInit(instance_, grid_));
      }
      while (static_cast<std::int64_t>(initial.size()) < count) {
        initial.push_back(RandomPrice(grid_, instance_.num_products(), rng_));
      }
    } else if (params_.stop.kind == StopRule::Kind::kPointBudget &&
               static_cast<std::int64_t>(initial.size()) > point_limit_) {
      initial.resize(point_limit_);
    }
    AddBatch(std::move(initial), /*improve=*/false);
    Notify();
  }

  bool Done() const {
    switch (params_.stop.kind) {
      case StopRule::Kind::kPointBudget:
        return Points() >= point_limit_;
      case StopRule::Kind::kIterations:
        return state_.iterations >= params_.stop.limit;
      case StopRule::Kind::kTimeLimit:
        return ElapsedMs() >= params_.stop.seconds * 1000.0;
    }
    return true;
  }

  int NextBatchSize() const {
    if (params_.stop.kind == StopRule::Kind::kPointBudget) {
      return static_cast<int>(
          std::min<std::int64_t>(params_.t, point_limit_ - Points()));
    }
    return params_.t;
  }

  // Evaluates, improves and appends the candidates. Returns true when the
  // incumbent strictly improved.
  bool AddBatch(std::vector<PriceVector> candidates, bool improve) {
    std::vector<Solution> batch;
    batch.reserve(candidates.size());
    for (PriceVector& p : candidates) {
      if (params_.dedup && !seen_.insert(p).second) continue;
      batch.push_back(MakeSolution(instance_, grid_, std::move(p)));
      ++state_.evals.evaluations;
    }
    if (improve) {
      RunPipeline(instance_, grid_, params_.pipeline, batch, rng_,
                  &state_.local_search);
    }

    const Money previous_best = state_.best_value;
    const bool had_best = state_.best_index >= 0;
    const int first_new = static_cast<int>(state_.population.size());
    for (Solution& s : batch) {
      if (params_.dedup) seen_.insert(s.prices);
      const int index = static_cast<int>(state_.population.size());
      if (state_.best_index < 0 || s.assignment.revenue > state_.best_value) {
        state_.best_index = index;
        state_.best_value = s.assignment.revenue;
      }
      state_.population.push_back({std::move(s.prices), s.assignment.revenue});
    }
    if (track_elites_) MergeElites(first_new);
    state_.trace.push_back({Points(), ElapsedMs(), state_.best_value});
    return had_best && state_.best_value > previous_best;
  }

  void EndIteration() {
    ++state_.iterations;
    Notify();
  }

  SearchResult Finish() {
    SearchResult result;
    result.best_prices = state_.population[state_.best_index].prices;
    result.best_value = state_.best_value;
    result.trace = state_.trace;
    result.evals = state_.evals;
    result.iterations = state_.iterations;
    result.elapsed_ms = ElapsedMs();
    result.local_search = state_.local_search;
    return result;
  }

  const PopulationMember& Elite(size_t rank) const {
    return state_.population[state_.elites[rank]];
  }

 private:
  std::int64_t Points() const {
    return static_cast<std::int64_t>(state_.population.size());
  }

  double ElapsedMs() const {
    return std::chrono::duration<double, std::milli>(Clock::now() - start_)
        .count();
  }

  // The old elites already beat every older non-elite, and new members are
  // younger than all of them, so the top q of (elites + new) is the top q of
  // the whole population.
  void MergeElites(int first_new) {
    std::vector<int>& elites = state_.elites;
    for (int i = first_new; i < static_cast<int>(state_.population.size()); ++i) {
      elites.push_back(i);
    }
    auto better = [this](int a, int b) {
      const Money ra = state_.population[a].revenue;
      const Money rb = state_.population[b].revenue;
      return ra != rb ? ra > rb : a < b;
    };
    const size_t keep = std::min<size_t>(params_.q, elites.size());
    std::partial_sort(elites.begin(), elites.begin() + keep, elites.end(),
                      better);
    elites.resize(keep);
  }

  void Notify() {
    if (observer_) observer_(state_);
  }

  const Instance& instance_;
  const BudgetGrid& grid_;
  const SearchParams& params_;
  Rng& rng_;
  const SearchObserver& observer_;
  const bool track_elites_;
  const Clock::time_point start_;
  std::int64_t point_limit_ = 0;
  SearchState state_;
  std::unordered_set<PriceVector, PriceVectorHash> seen_;
};

}  // namespace

SearchResult NaiveSearch(const Instance& instance, const BudgetGrid& grid,
                         const SearchParams& params, Rng& rng,
                         const SearchObserver& observer) {
  PopulationSearch search(instance, grid, params, rng, observer,
                          /*track_elites=*/false);
  search.Initialize();
  while (!search.Done()) {
    const int size = search.NextBatchSize();
    std::vector<PriceVector> batch;
    batch.reserve(size);
    for (int t = 0; t < size; ++t) {
      batch.push_back(RandomPrice(grid, instance.num_products(), rng));
    }
    search.AddBatch(std::move(batch), /*improve=*/true);
    search.EndIteration();
  }
  return search.Finish();
}

SearchResult VnsSearch(const Instance& instance, const BudgetGrid& grid,
                       const SearchParams& params, Rng& rng,
                       const SearchObserver& observer) {
  PopulationSearch search(instance, grid, params, rng, observer,
                          /*track_elites=*/true);
  search.Initialize();
  SearchState& state = search.state();
  const int max_radius = std::max(1, grid.size() - 1);
  state.radius = 1;
  while (!search.Done()) {
    const int size = search.NextBatchSize();
    std::vector<PriceVector> batch;
    batch.reserve(size);
    for (int t = 0; t < size; ++t) {
      const PopulationMember& center = search.Elite(rng.Uniform(state.elites.size()));
      batch.push_back(Neighborhood(grid, center.prices, state.radius).Sample(rng));
    }
    if (search.AddBatch(std::move(batch), /*improve=*/true)) {
      if (params.vns_reset_radius) state.radius = 1;
    } else {
      state.radius = std::min(state.radius + 1, max_radius);
    }
    search.EndIteration();
  }
  return search.Finish();
}

SearchResult GeneticSearch(const Instance& instance, const BudgetGrid& grid,
                           const SearchParams& params, Rng& rng,
                           const SearchObserver& observer) {
  PopulationSearch search(instance, grid, params, rng, observer,
                          /*track_elites=*/true);
  search.Initialize();
  SearchState& state = search.state();
  while (!search.Done()) {
    const int size = search.NextBatchSize();
    const std::uint64_t pool = state.elites.size();
    std::vector<PriceVector> batch;
    batch.reserve(size);
    for (int t = 0; t < size; ++t) {
      const std::uint64_t a = rng.Uniform(pool);
      std::uint64_t b;
      if (params.parents_with_replacement || pool < 2) {
        b = rng.Uniform(pool);
      } else {
        b = rng.Uniform(pool - 1);
        if (b >= a) ++b;
      }
      PriceVector child =
          Crossover(search.Elite(a).prices, search.Elite(b).prices, rng);
      batch.push_back(Mutate(grid, child, rng));
    }
    search.AddBatch(std::move(batch), /*improve=*/true);
    search.EndIteration();
  }
  return search.Finish();
}

SearchResult RunSearch(Method method, const Instance& instance,
                       const BudgetGrid& grid, const SearchParams& params,
                       const SearchObserver& observer) {
  params.Validate(method, instance, grid);
  Rng rng(params.seed);
  switch (method) {
    case Method::kNaive:
      return NaiveSearch(instance, grid, params, rng, observer);
    case Method::kVns:
      return VnsSearch(instance, grid, params, rng, observer);
    case Method::kGenetic:
      return GeneticSearch(instance, grid, params, rng, observer);
  }
  throw Error(ErrorCode::kInternal, "unreachable");
}

}  // namespace rankprice
