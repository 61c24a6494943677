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

// Experiment harness: synthetic instances, many seeded runs of one
// configuration, percentile traces and CSV output.

#ifndef RANKPRICE_CORE_BENCH_H_
#define RANKPRICE_CORE_BENCH_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core/heuristics.h"
#include "core/model.h"

namespace rankprice {

// Budgets uniform on [budget_lo, budget_hi]; each product is acceptable to a
// customer with probability `availability` (rows are redrawn until
// non-empty) and acceptable products are ranked by a random permutation.
// Throws kInvalidRange.
Instance GenerateInstance(int num_products, int num_customers, Money budget_lo,
                          Money budget_hi, double availability,
                          std::uint64_t seed);

struct ExperimentConfig {
  std::string instance_path;
  Method method = Method::kVns;
  SearchParams params = DefaultParams(Method::kVns);  // params.seed unused
  int runs = 1000;
  std::uint64_t base_seed = 0;  // run j uses base_seed + j
  std::string out_dir;          // empty: no files written
  int workers = 1;
  std::optional<Money> reference;

  // Throws kInvalidArgument.
  void Validate() const;
};

// JSON object with keys instance_path, method, init, pipeline, l0, q, t,
// one of max_points / time_limit / iterations, runs, base_seed, out_dir,
// workers, vns_reset_radius, parents_with_replacement, dedup, reference.
// Missing keys keep their defaults; q defaults per method. Unknown keys are
// rejected with kParse.
ExperimentConfig ExperimentConfigFromJson(const std::string& text);
ExperimentConfig ReadExperimentConfig(const std::string& path);

struct RunSummary {
  int run_id = 0;
  std::uint64_t seed = 0;
  Money best_value = 0;
  std::vector<Money> best_prices;
  std::int64_t evals = 0;
  double elapsed_ms = 0.0;
  LocalSearchStats local_search;
  std::vector<TracePoint> trace;
};

struct EvolutionCheckpoint {
  int checkpoint = 0;
  std::int64_t evals = 0;     // median over runs
  double elapsed_ms = 0.0;    // median over runs
  Money p5 = 0;
  Money p50 = 0;
  Money p95 = 0;
};

// One checkpoint per evaluation batch. Runs that stopped earlier contribute
// their final value.
struct EvolutionStats {
  std::vector<EvolutionCheckpoint> checkpoints;
};

// Nearest-rank percentile: the ceil(pct/100 * n)-th smallest value.
// Throws kEmptyInput.
Money NearestRankPercentile(std::span<const Money> values, int pct);
double NearestRankPercentile(std::span<const double> values, int pct);

EvolutionStats ComputeEvolution(std::span<const RunSummary> runs);

struct DistributionReport {
  size_t count = 0;
  Money min = 0;
  Money q1 = 0;
  Money median = 0;
  Money q3 = 0;
  Money max = 0;
  double mean = 0.0;
  double variance = 0.0;  // population variance
  std::optional<Money> reference;
  double hit_rate = 0.0;       // share of values >= reference
  std::vector<double> ratios;  // value / reference, input order
};

// Throws kEmptyInput.
DistributionReport Summarize(std::span<const Money> values,
                             std::optional<Money> reference = std::nullopt);
DistributionReport Summarize(std::span<const RunSummary> runs,
                             std::optional<Money> reference = std::nullopt);

struct ExperimentResult {
  std::vector<RunSummary> runs;  // sorted by run_id
  EvolutionStats evolution;
};

ExperimentResult RunExperiment(const ExperimentConfig& config,
                               const Instance& instance);

// Loads config.instance_path, runs, and writes the CSV files when
// config.out_dir is set. Throws kInstanceRead / kOutputWrite.
ExperimentResult RunExperiment(const ExperimentConfig& config);

// summary.csv, trace.csv, percentiles.csv and local_search.csv. The first
// line of each is a '#' metadata comment carrying the wall-clock timestamp.
void WriteExperimentCsv(const ExperimentConfig& config,
                        const ExperimentResult& result,
                        const std::string& out_dir);

}  // namespace rankprice

#endif  // RANKPRICE_CORE_BENCH_H_
