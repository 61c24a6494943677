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

#include "rankprice/rankprice.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/bench.h"
#include "core/evaluator.h"
#include "core/exact.h"
#include "core/instance_io.h"
#include "core/local_search.h"
#include "core/model.h"
#include "core/status.h"

using rankprice::ErrorCode;

struct rp_instance {
  rankprice::Instance instance;
  rankprice::BudgetGrid grid;

  explicit rp_instance(rankprice::Instance inst)
      : instance(std::move(inst)), grid(rankprice::BuildGrid(instance)) {}
};

struct rp_exact_result {
  rankprice::ExactResult result;
  std::vector<std::vector<rankprice::Money>> prices;
};

struct rp_config {
  rankprice::ExperimentConfig config;
  bool q_set = false;
};

struct rp_report {
  rankprice::ExperimentResult result;
  std::optional<rankprice::Money> reference;
};

namespace {

thread_local std::string last_error;

rp_status Fail(rp_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

rp_status Fail(ErrorCode code, std::string message) {
  return Fail(static_cast<rp_status>(code), std::move(message));
}

// Runs body and converts exceptions into status codes.
template <typename F>
rp_status Guard(F&& body) {
  try {
    body();
    return RP_OK;
  } catch (const rankprice::Error& e) {
    return Fail(e.code(), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(RP_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(RP_ERR_INTERNAL, e.what());
  }
}

void Require(bool condition, const char* what) {
  if (!condition) {
    throw rankprice::Error(ErrorCode::kInvalidArgument, what);
  }
}

void RequireLength(size_t got, size_t want, const char* what) {
  if (got != want) {
    throw rankprice::Error(ErrorCode::kLengthMismatch,
                           std::string(what) + ": expected " +
                               std::to_string(want) + " values, got " +
                               std::to_string(got));
  }
}

char* CopyString(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

void ApplyQDefault(rp_config& c) {
  if (!c.q_set) c.config.params.q = rankprice::DefaultParams(c.config.method).q;
}

}  // namespace

extern "C" {

const char* rp_last_error(void) { return last_error.c_str(); }

const char* rp_status_string(rp_status status) {
  return rankprice::ErrorCodeName(static_cast<ErrorCode>(status));
}

void rp_string_free(char* text) { std::free(text); }

rp_status rp_instance_load(const char* path, rp_instance** out) {
  return Guard([&] {
    Require(path != nullptr && out != nullptr, "null argument");
    *out = new rp_instance(rankprice::ReadInstance(path));
  });
}

rp_status rp_instance_from_json(const char* text, rp_instance** out) {
  return Guard([&] {
    Require(text != nullptr && out != nullptr, "null argument");
    *out = new rp_instance(rankprice::InstanceFromJson(text));
  });
}

rp_status rp_instance_create(const char* name, int num_products,
                             int num_customers, const int64_t* budgets,
                             const int32_t* scores, rp_instance** out) {
  return Guard([&] {
    Require(out != nullptr, "null argument");
    Require(num_products >= 1 && num_customers >= 1,
            "products and customers must be positive");
    Require(budgets != nullptr && scores != nullptr, "null argument");
    std::vector<rankprice::Money> b(budgets, budgets + num_customers);
    std::vector<rankprice::PreferenceRow> rows(num_customers);
    for (int k = 0; k < num_customers; ++k) {
      rows[k].resize(num_products);
      for (int i = 0; i < num_products; ++i) {
        const int32_t s = scores[static_cast<size_t>(k) * num_products + i];
        if (s != rankprice::kAbsent) rows[k][i] = s;
      }
    }
    *out = new rp_instance(rankprice::Instance::Create(
        name ? name : "", num_products, num_customers, std::move(b), rows));
  });
}

rp_status rp_instance_generate(int num_products, int num_customers,
                               int64_t budget_lo, int64_t budget_hi,
                               double availability, uint64_t seed,
                               rp_instance** out) {
  return Guard([&] {
    Require(out != nullptr, "null argument");
    *out = new rp_instance(rankprice::GenerateInstance(
        num_products, num_customers, budget_lo, budget_hi, availability, seed));
  });
}

rp_status rp_instance_save(const rp_instance* instance, const char* path) {
  return Guard([&] {
    Require(instance != nullptr && path != nullptr, "null argument");
    rankprice::WriteInstance(instance->instance, path);
  });
}

rp_status rp_instance_to_json(const rp_instance* instance, char** out) {
  return Guard([&] {
    Require(instance != nullptr && out != nullptr, "null argument");
    *out = CopyString(rankprice::InstanceToJson(instance->instance));
  });
}

void rp_instance_free(rp_instance* instance) { delete instance; }

const char* rp_instance_name(const rp_instance* instance) {
  return instance ? instance->instance.name().c_str() : "";
}

int rp_instance_num_products(const rp_instance* instance) {
  return instance ? instance->instance.num_products() : 0;
}

int rp_instance_num_customers(const rp_instance* instance) {
  return instance ? instance->instance.num_customers() : 0;
}

int rp_instance_grid_size(const rp_instance* instance) {
  return instance ? instance->grid.size() : 0;
}

rp_status rp_instance_grid(const rp_instance* instance, int64_t* values,
                           size_t n) {
  return Guard([&] {
    Require(instance != nullptr && values != nullptr, "null argument");
    RequireLength(n, instance->grid.size(), "grid");
    const auto v = instance->grid.values();
    std::copy(v.begin(), v.end(), values);
  });
}

rp_status rp_evaluate(const rp_instance* instance, const int64_t* prices,
                      size_t n, int64_t* revenue, int32_t* chosen,
                      size_t num_chosen) {
  return Guard([&] {
    Require(instance != nullptr && prices != nullptr && revenue != nullptr,
            "null argument");
    RequireLength(n, instance->instance.num_products(), "prices");
    if (chosen != nullptr) {
      RequireLength(num_chosen, instance->instance.num_customers(), "chosen");
    }
    const rankprice::Assignment a = rankprice::AssignPrices(
        instance->instance, std::span<const rankprice::Money>(prices, n));
    *revenue = a.revenue;
    if (chosen != nullptr) std::copy(a.chosen.begin(), a.chosen.end(), chosen);
  });
}

rp_status rp_local_search(const rp_instance* instance, const char* pipeline,
                          uint64_t seed, int64_t* prices, size_t n,
                          int64_t* revenue) {
  return Guard([&] {
    Require(instance != nullptr && pipeline != nullptr && prices != nullptr,
            "null argument");
    const auto parsed = rankprice::LocalSearchPipeline::Parse(pipeline);
    const rankprice::PriceVector p = rankprice::PriceVectorFromPrices(
        instance->grid, std::span<const rankprice::Money>(prices, n),
        instance->instance.num_products());
    rankprice::Solution s =
        rankprice::MakeSolution(instance->instance, instance->grid, p);
    rankprice::Rng rng(seed);
    rankprice::RunPipeline(instance->instance, instance->grid, parsed,
                           std::span<rankprice::Solution>(&s, 1), rng);
    const auto realized = rankprice::RealizePrices(instance->grid, s.prices);
    std::copy(realized.begin(), realized.end(), prices);
    if (revenue != nullptr) *revenue = s.assignment.revenue;
  });
}

rp_status rp_brute_force(const rp_instance* instance, uint64_t cap,
                         int workers, rp_exact_result** out) {
  return Guard([&] {
    Require(instance != nullptr && out != nullptr, "null argument");
    auto* r = new rp_exact_result;
    try {
      r->result = rankprice::BruteForce(
          instance->instance, instance->grid,
          cap == 0 ? rankprice::kDefaultEnumerationCap : cap, workers);
      for (const auto& p : r->result.optima) {
        r->prices.push_back(rankprice::RealizePrices(instance->grid, p));
      }
    } catch (...) {
      delete r;
      throw;
    }
    *out = r;
  });
}

int64_t rp_exact_optimum(const rp_exact_result* result) {
  return result ? result->result.optimum : 0;
}

uint64_t rp_exact_evaluated(const rp_exact_result* result) {
  return result ? result->result.evaluated : 0;
}

size_t rp_exact_num_optima(const rp_exact_result* result) {
  return result ? result->prices.size() : 0;
}

rp_status rp_exact_optimum_prices(const rp_exact_result* result, size_t index,
                                  int64_t* prices, size_t n) {
  return Guard([&] {
    Require(result != nullptr && prices != nullptr, "null argument");
    Require(index < result->prices.size(), "optimum index out of range");
    const auto& p = result->prices[index];
    RequireLength(n, p.size(), "prices");
    std::copy(p.begin(), p.end(), prices);
  });
}

void rp_exact_result_free(rp_exact_result* result) { delete result; }

rp_status rp_export_lp(const rp_instance* instance, const char* path) {
  return Guard([&] {
    Require(instance != nullptr && path != nullptr, "null argument");
    const std::string text =
        rankprice::ExportSingleLevel(instance->instance, instance->grid);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
    out.flush();
    if (!out) {
      throw rankprice::Error(ErrorCode::kOutputWrite,
                             std::string("cannot write ") + path);
    }
  });
}

rp_status rp_export_lp_string(const rp_instance* instance, char** out) {
  return Guard([&] {
    Require(instance != nullptr && out != nullptr, "null argument");
    *out = CopyString(
        rankprice::ExportSingleLevel(instance->instance, instance->grid));
  });
}

rp_status rp_config_create(const char* method, rp_config** out) {
  return Guard([&] {
    Require(out != nullptr, "null argument");
    auto c = std::make_unique<rp_config>();
    if (method != nullptr) c->config.method = rankprice::ParseMethod(method);
    c->config.params = rankprice::DefaultParams(c->config.method);
    *out = c.release();
  });
}

rp_status rp_config_from_json(const char* text, rp_config** out) {
  return Guard([&] {
    Require(text != nullptr && out != nullptr, "null argument");
    auto c = std::make_unique<rp_config>();
    c->config = rankprice::ExperimentConfigFromJson(text);
    c->q_set = true;  // the JSON already applied its own default
    *out = c.release();
  });
}

rp_status rp_config_load(const char* path, rp_config** out) {
  return Guard([&] {
    Require(path != nullptr && out != nullptr, "null argument");
    auto c = std::make_unique<rp_config>();
    c->config = rankprice::ReadExperimentConfig(path);
    c->q_set = true;
    *out = c.release();
  });
}

rp_status rp_config_set_string(rp_config* config, const char* key,
                               const char* value) {
  return Guard([&] {
    Require(config != nullptr && key != nullptr && value != nullptr,
            "null argument");
    rankprice::ExperimentConfig& c = config->config;
    const std::string_view k(key);
    if (k == "instance_path") {
      c.instance_path = value;
    } else if (k == "method") {
      c.method = rankprice::ParseMethod(value);
      ApplyQDefault(*config);
    } else if (k == "init") {
      c.params.init = rankprice::ParseInitKind(value);
    } else if (k == "pipeline") {
      c.params.pipeline = rankprice::LocalSearchPipeline::Parse(value);
    } else if (k == "out_dir") {
      c.out_dir = value;
    } else {
      throw rankprice::Error(ErrorCode::kInvalidArgument,
                             "unknown string key '" + std::string(k) + "'");
    }
  });
}

rp_status rp_config_set_int(rp_config* config, const char* key,
                            int64_t value) {
  return Guard([&] {
    Require(config != nullptr && key != nullptr, "null argument");
    rankprice::ExperimentConfig& c = config->config;
    const std::string_view k(key);
    auto as_int = [&] {
      Require(value >= INT32_MIN && value <= INT32_MAX, "value out of range");
      return static_cast<int>(value);
    };
    if (k == "l0") {
      c.params.l0 = as_int();
    } else if (k == "q") {
      c.params.q = as_int();
      config->q_set = true;
    } else if (k == "t") {
      c.params.t = as_int();
    } else if (k == "max_points") {
      c.params.stop = rankprice::StopRule::Points(value);
    } else if (k == "iterations") {
      c.params.stop = rankprice::StopRule::Iterations(value);
    } else if (k == "runs") {
      c.runs = as_int();
    } else if (k == "base_seed") {
      c.base_seed = static_cast<uint64_t>(value);
    } else if (k == "workers") {
      c.workers = as_int();
    } else if (k == "reference") {
      c.reference = value;
    } else if (k == "vns_reset_radius") {
      c.params.vns_reset_radius = value != 0;
    } else if (k == "parents_with_replacement") {
      c.params.parents_with_replacement = value != 0;
    } else if (k == "dedup") {
      c.params.dedup = value != 0;
    } else {
      throw rankprice::Error(ErrorCode::kInvalidArgument,
                             "unknown integer key '" + std::string(k) + "'");
    }
  });
}

rp_status rp_config_set_double(rp_config* config, const char* key,
                               double value) {
  return Guard([&] {
    Require(config != nullptr && key != nullptr, "null argument");
    if (std::string_view(key) == "time_limit") {
      config->config.params.stop = rankprice::StopRule::Seconds(value);
    } else {
      throw rankprice::Error(ErrorCode::kInvalidArgument,
                             "unknown real key '" + std::string(key) + "'");
    }
  });
}

void rp_config_free(rp_config* config) { delete config; }

rp_status rp_run_experiment(const rp_config* config,
                            const rp_instance* instance, rp_report** out) {
  return Guard([&] {
    Require(config != nullptr && out != nullptr, "null argument");
    auto report = std::make_unique<rp_report>();
    const rankprice::ExperimentConfig& c = config->config;
    if (instance != nullptr) {
      report->result = rankprice::RunExperiment(c, instance->instance);
      if (!c.out_dir.empty()) {
        rankprice::WriteExperimentCsv(c, report->result, c.out_dir);
      }
    } else {
      report->result = rankprice::RunExperiment(c);
    }
    report->reference = c.reference;
    *out = report.release();
  });
}

size_t rp_report_num_runs(const rp_report* report) {
  return report ? report->result.runs.size() : 0;
}

rp_status rp_report_run(const rp_report* report, size_t run,
                        rp_run_info* out) {
  return Guard([&] {
    Require(report != nullptr && out != nullptr, "null argument");
    Require(run < report->result.runs.size(), "run index out of range");
    const rankprice::RunSummary& r = report->result.runs[run];
    out->run_id = r.run_id;
    out->seed = r.seed;
    out->best_value = r.best_value;
    out->evals = r.evals;
    out->elapsed_ms = r.elapsed_ms;
    out->ls_evaluations = r.local_search.evaluations;
    out->fill_reverts = r.local_search.fill_reverts;
    out->fill_poaching = r.local_search.fill_poaching;
    out->reassign_reverts = r.local_search.reassign_reverts;
    out->conditional_reverts = r.local_search.conditional_reverts;
  });
}

rp_status rp_report_run_prices(const rp_report* report, size_t run,
                               int64_t* prices, size_t n) {
  return Guard([&] {
    Require(report != nullptr && prices != nullptr, "null argument");
    Require(run < report->result.runs.size(), "run index out of range");
    const auto& p = report->result.runs[run].best_prices;
    RequireLength(n, p.size(), "prices");
    std::copy(p.begin(), p.end(), prices);
  });
}

size_t rp_report_trace_length(const rp_report* report, size_t run) {
  if (report == nullptr || run >= report->result.runs.size()) return 0;
  return report->result.runs[run].trace.size();
}

rp_status rp_report_trace_point(const rp_report* report, size_t run,
                                size_t index, rp_trace_point* out) {
  return Guard([&] {
    Require(report != nullptr && out != nullptr, "null argument");
    Require(run < report->result.runs.size(), "run index out of range");
    const auto& trace = report->result.runs[run].trace;
    Require(index < trace.size(), "trace index out of range");
    out->evals = trace[index].evals;
    out->elapsed_ms = trace[index].elapsed_ms;
    out->best_value = trace[index].best_value;
  });
}

size_t rp_report_num_checkpoints(const rp_report* report) {
  return report ? report->result.evolution.checkpoints.size() : 0;
}

rp_status rp_report_checkpoint(const rp_report* report, size_t index,
                               rp_checkpoint* out) {
  return Guard([&] {
    Require(report != nullptr && out != nullptr, "null argument");
    const auto& cps = report->result.evolution.checkpoints;
    Require(index < cps.size(), "checkpoint index out of range");
    out->checkpoint = cps[index].checkpoint;
    out->evals = cps[index].evals;
    out->elapsed_ms = cps[index].elapsed_ms;
    out->p5 = cps[index].p5;
    out->p50 = cps[index].p50;
    out->p95 = cps[index].p95;
  });
}

rp_status rp_report_summary(const rp_report* report, rp_summary* out) {
  return Guard([&] {
    Require(report != nullptr && out != nullptr, "null argument");
    const rankprice::DistributionReport d =
        rankprice::Summarize(std::span<const rankprice::RunSummary>(
                                 report->result.runs),
                             report->reference);
    *out = rp_summary{};
    out->count = d.count;
    out->min = d.min;
    out->q1 = d.q1;
    out->median = d.median;
    out->q3 = d.q3;
    out->max = d.max;
    out->mean = d.mean;
    out->variance = d.variance;
    out->has_reference = d.reference.has_value() ? 1 : 0;
    out->reference = d.reference.value_or(0);
    out->hit_rate = d.hit_rate;
    if (!d.ratios.empty()) {
      out->min_ratio = *std::min_element(d.ratios.begin(), d.ratios.end());
      out->max_ratio = *std::max_element(d.ratios.begin(), d.ratios.end());
    }
  });
}

void rp_report_free(rp_report* report) { delete report; }

}  // extern "C"
