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

#include "core/bench.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "core/instance_io.h"
#include "core/random.h"
#include "core/status.h"
#include "json.hpp"

namespace rankprice {

Instance GenerateInstance(int num_products, int num_customers, Money budget_lo,
                          Money budget_hi, double availability,
                          std::uint64_t seed) {
  if (num_products < 1 || num_customers < 1) {
    throw Error(ErrorCode::kInvalidRange,
                "products and customers must be positive");
  }
  if (budget_lo < 1 || budget_lo > budget_hi) {
    throw Error(ErrorCode::kInvalidRange,
                "budget range [" + std::to_string(budget_lo) + ", " +
                    std::to_string(budget_hi) + "] must satisfy 1 <= lo <= hi");
  }
  if (!(availability > 0.0 && availability <= 1.0)) {
    throw Error(ErrorCode::kInvalidRange, "availability must be in (0, 1]");
  }

  Rng rng(seed);
  std::vector<Money> budgets(num_customers);
  for (Money& b : budgets) b = rng.UniformInt(budget_lo, budget_hi);

  std::vector<PreferenceRow> preferences(num_customers);
  for (PreferenceRow& row : preferences) {
    std::vector<int> acceptable;
    do {
      acceptable.clear();
      for (int i = 0; i < num_products; ++i) {
        if (rng.Bernoulli(availability)) acceptable.push_back(i);
      }
    } while (acceptable.empty());
    rng.Shuffle(std::span<int>(acceptable));
    row.assign(num_products, std::nullopt);
    const auto n = static_cast<Score>(acceptable.size());
    for (Score r = 0; r < n; ++r) row[acceptable[r]] = n - r;
  }

  const std::string name = "generated-I" + std::to_string(num_products) + "-K" +
                           std::to_string(num_customers) + "-seed" +
                           std::to_string(seed);
  return Instance::Create(name, num_products, num_customers, std::move(budgets),
                          preferences);
}

void ExperimentConfig::Validate() const {
  if (runs < 1) throw Error(ErrorCode::kInvalidArgument, "runs must be positive");
  if (workers < 1) {
    throw Error(ErrorCode::kInvalidArgument, "workers must be positive");
  }
}

namespace {

using nlohmann::json;

template <typename T>
T Get(const json& value, const std::string& key) {
  try {
    return value.get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, "config key '" + key + "': " + e.what());
  }
}

}  // namespace

ExperimentConfig ExperimentConfigFromJson(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::kParse, "config must be an object");

  ExperimentConfig config;
  if (doc.contains("method")) {
    config.method = ParseMethod(Get<std::string>(doc["method"], "method"));
  }
  config.params = DefaultParams(config.method);
  int stop_rules = 0;
  for (const auto& [key, value] : doc.items()) {
    if (key == "method") {
      continue;
    } else if (key == "instance_path" || key == "instance") {
      config.instance_path = Get<std::string>(value, key);
    } else if (key == "init") {
      config.params.init = ParseInitKind(Get<std::string>(value, key));
    } else if (key == "pipeline" || key == "local_search") {
      config.params.pipeline =
          LocalSearchPipeline::Parse(Get<std::string>(value, key));
    } else if (key == "l0") {
      config.params.l0 = Get<int>(value, key);
    } else if (key == "q") {
      config.params.q = Get<int>(value, key);
    } else if (key == "t") {
      config.params.t = Get<int>(value, key);
    } else if (key == "max_points") {
      config.params.stop = StopRule::Points(Get<std::int64_t>(value, key));
      ++stop_rules;
    } else if (key == "time_limit") {
      config.params.stop = StopRule::Seconds(Get<double>(value, key));
      ++stop_rules;
    } else if (key == "iterations") {
      config.params.stop = StopRule::Iterations(Get<std::int64_t>(value, key));
      ++stop_rules;
    } else if (key == "runs") {
      config.runs = Get<int>(value, key);
    } else if (key == "base_seed" || key == "seed") {
      config.base_seed = Get<std::uint64_t>(value, key);
    } else if (key == "out_dir") {
      config.out_dir = Get<std::string>(value, key);
    } else if (key == "workers") {
      config.workers = Get<int>(value, key);
    } else if (key == "vns_reset_radius") {
      config.params.vns_reset_radius = Get<bool>(value, key);
    } else if (key == "parents_with_replacement") {
      config.params.parents_with_replacement = Get<bool>(value, key);
    } else if (key == "dedup") {
      config.params.dedup = Get<bool>(value, key);
    } else if (key == "reference") {
      if (!value.is_null()) config.reference = Get<Money>(value, key);
    } else {
      throw Error(ErrorCode::kParse, "unknown config key '" + key + "'");
    }
  }
  if (stop_rules > 1) {
    throw Error(ErrorCode::kParse,
                "at most one of max_points, time_limit, iterations");
  }
  return config;
}

ExperimentConfig ReadExperimentConfig(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInstanceRead, "cannot open config " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return ExperimentConfigFromJson(buf.str());
}

Money NearestRankPercentile(std::span<const Money> values, int pct) {
  if (values.empty()) throw Error(ErrorCode::kEmptyInput, "no values");
  std::vector<Money> sorted(values.begin(), values.end());
  const size_t n = sorted.size();
  size_t rank = (static_cast<size_t>(pct) * n + 99) / 100;
  rank = std::clamp<size_t>(rank, 1, n);
  std::nth_element(sorted.begin(), sorted.begin() + (rank - 1), sorted.end());
  return sorted[rank - 1];
}

double NearestRankPercentile(std::span<const double> values, int pct) {
  if (values.empty()) throw Error(ErrorCode::kEmptyInput, "no values");
  std::vector<double> sorted(values.begin(), values.end());
  const size_t n = sorted.size();
  size_t rank = (static_cast<size_t>(pct) * n + 99) / 100;
  rank = std::clamp<size_t>(rank, 1, n);
  std::nth_element(sorted.begin(), sorted.begin() + (rank - 1), sorted.end());
  return sorted[rank - 1];
}

EvolutionStats ComputeEvolution(std::span<const RunSummary> runs) {
  EvolutionStats stats;
  size_t length = 0;
  for (const RunSummary& run : runs) length = std::max(length, run.trace.size());

  std::vector<Money> best(runs.size());
  std::vector<Money> evals(runs.size());
  std::vector<double> elapsed(runs.size());
  for (size_t c = 0; c < length; ++c) {
    size_t n = 0;
    for (const RunSummary& run : runs) {
      if (run.trace.empty()) continue;
      const TracePoint& point = run.trace[std::min(c, run.trace.size() - 1)];
      best[n] = point.best_value;
      evals[n] = point.evals;
      elapsed[n] = point.elapsed_ms;
      ++n;
    }
    std::span<const Money> b(best.data(), n);
    EvolutionCheckpoint cp;
    cp.checkpoint = static_cast<int>(c);
    cp.evals = NearestRankPercentile(std::span<const Money>(evals.data(), n), 50);
    cp.elapsed_ms =
        NearestRankPercentile(std::span<const double>(elapsed.data(), n), 50);
    cp.p5 = NearestRankPercentile(b, 5);
    cp.p50 = NearestRankPercentile(b, 50);
    cp.p95 = NearestRankPercentile(b, 95);
    stats.checkpoints.push_back(cp);
  }
  return stats;
}

DistributionReport Summarize(std::span<const Money> values,
                             std::optional<Money> reference) {
  if (values.empty()) throw Error(ErrorCode::kEmptyInput, "nothing to summarize");
  DistributionReport report;
  report.count = values.size();
  report.min = *std::min_element(values.begin(), values.end());
  report.max = *std::max_element(values.begin(), values.end());
  report.q1 = NearestRankPercentile(values, 25);
  report.median = NearestRankPercentile(values, 50);
  report.q3 = NearestRankPercentile(values, 75);
  double sum = 0.0;
  for (Money v : values) sum += static_cast<double>(v);
  report.mean = sum / static_cast<double>(values.size());
  double squares = 0.0;
  for (Money v : values) {
    const double d = static_cast<double>(v) - report.mean;
    squares += d * d;
  }
  report.variance = squares / static_cast<double>(values.size());
  report.reference = reference;
  if (reference) {
    size_t hits = 0;
    report.ratios.reserve(values.size());
    for (Money v : values) {
      if (v >= *reference) ++hits;
      report.ratios.push_back(static_cast<double>(v) /
                              static_cast<double>(*reference));
    }
    report.hit_rate =
        static_cast<double>(hits) / static_cast<double>(values.size());
  }
  return report;
}

DistributionReport Summarize(std::span<const RunSummary> runs,
                             std::optional<Money> reference) {
  std::vector<Money> values;
  values.reserve(runs.size());
  for (const RunSummary& run : runs) values.push_back(run.best_value);
  return Summarize(values, reference);
}

ExperimentResult RunExperiment(const ExperimentConfig& config,
                               const Instance& instance) {
  config.Validate();
  const BudgetGrid grid = BuildGrid(instance);
  config.params.Validate(config.method, instance, grid);

  ExperimentResult result;
  result.runs.resize(config.runs);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int j = next++; j < config.runs; j = next++) {
      SearchParams params = config.params;
      params.seed = config.base_seed + static_cast<std::uint64_t>(j);
      SearchResult search = RunSearch(config.method, instance, grid, params);
      RunSummary& run = result.runs[j];
      run.run_id = j;
      run.seed = params.seed;
      run.best_value = search.best_value;
      run.best_prices = RealizePrices(grid, search.best_prices);
      run.evals = search.evals.evaluations;
      run.elapsed_ms = search.elapsed_ms;
      run.local_search = search.local_search;
      run.trace = std::move(search.trace);
    }
  };
  const int workers = std::min(config.workers, config.runs);
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (int w = 0; w < workers; ++w) threads.emplace_back(worker);
  }
  result.evolution = ComputeEvolution(result.runs);
  return result;
}

ExperimentResult RunExperiment(const ExperimentConfig& config) {
  const Instance instance = ReadInstance(config.instance_path);
  ExperimentResult result = RunExperiment(config, instance);
  if (!config.out_dir.empty()) WriteExperimentCsv(config, result, config.out_dir);
  return result;
}

namespace {

std::string Milliseconds(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", ms);
  return buf;
}

std::string UtcTimestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

class CsvFile {
 public:
  CsvFile(const std::filesystem::path& path, const std::string& metadata)
      : path_(path), out_(path, std::ios::binary | std::ios::trunc) {
    if (!out_) {
      throw Error(ErrorCode::kOutputWrite, "cannot open " + path.string());
    }
    out_ << "# " << metadata << '\n';
  }

  std::ostream& stream() { return out_; }

  void Close() {
    out_.flush();
    if (!out_) throw Error(ErrorCode::kOutputWrite, "cannot write " + path_.string());
  }

 private:
  std::filesystem::path path_;
  std::ofstream out_;
};

}  // namespace

void WriteExperimentCsv(const ExperimentConfig& config,
                        const ExperimentResult& result,
                        const std::string& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    throw Error(ErrorCode::kOutputWrite,
                "cannot create " + out_dir + ": " + ec.message());
  }
  const std::string pipeline = config.params.pipeline.ToString();
  const std::string metadata = "rankprice generated=" + UtcTimestamp() +
                               " method=" + MethodName(config.method) +
                               " runs=" + std::to_string(config.runs) +
                               " base_seed=" + std::to_string(config.base_seed);
  const std::filesystem::path dir(out_dir);

  CsvFile summary(dir / "summary.csv", metadata);
  summary.stream()
      << "run_id,seed,method,init,pipeline,evals,elapsed_ms,best_value,best_prices\n";
  for (const RunSummary& run : result.runs) {
    summary.stream() << run.run_id << ',' << run.seed << ','
                     << MethodName(config.method) << ','
                     << InitKindName(config.params.init) << ','
                     << (pipeline.empty() ? "-" : pipeline) << ',' << run.evals
                     << ',' << Milliseconds(run.elapsed_ms) << ','
                     << run.best_value << ",\"" << FormatPrices(run.best_prices)
                     << "\"\n";
  }
  summary.Close();

  CsvFile trace(dir / "trace.csv", metadata);
  trace.stream() << "run_id,evals,elapsed_ms,best_value\n";
  for (const RunSummary& run : result.runs) {
    for (const TracePoint& point : run.trace) {
      trace.stream() << run.run_id << ',' << point.evals << ','
                     << Milliseconds(point.elapsed_ms) << ',' << point.best_value
                     << '\n';
    }
  }
  trace.Close();

  CsvFile percentiles(dir / "percentiles.csv", metadata);
  percentiles.stream() << "checkpoint,evals,elapsed_ms,p5,p50,p95\n";
  for (const EvolutionCheckpoint& cp : result.evolution.checkpoints) {
    percentiles.stream() << cp.checkpoint << ',' << cp.evals << ','
                         << Milliseconds(cp.elapsed_ms) << ',' << cp.p5 << ','
                         << cp.p50 << ',' << cp.p95 << '\n';
  }
  percentiles.Close();

  CsvFile local(dir / "local_search.csv", metadata);
  local.stream() << "run_id,ls_evals,fill_reverts,fill_poaching,"
                    "reassign_reverts,conditional_reverts,opt_improvements\n";
  for (const RunSummary& run : result.runs) {
    const LocalSearchStats& s = run.local_search;
    local.stream() << run.run_id << ',' << s.evaluations << ',' << s.fill_reverts
                   << ',' << s.fill_poaching << ',' << s.reassign_reverts << ','
                   << s.conditional_reverts << ',' << s.opt_improvements << '\n';
  }
  local.Close();
}

}  // namespace rankprice
