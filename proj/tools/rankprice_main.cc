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

// rankprice command-line tool. Talks to the solver only through the C API.

#include <cerrno>
#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rankprice/rankprice.h"

namespace {

// Thrown after a failed C call; main prints it and exits with 1.
struct CallFailed : std::runtime_error {
  explicit CallFailed(rp_status status)
      : std::runtime_error(std::string(rp_status_string(status)) + ": " +
                           rp_last_error()) {}
};

void Check(rp_status status) {
  if (status != RP_OK) throw CallFailed(status);
}

struct InstanceDeleter {
  void operator()(rp_instance* p) const { rp_instance_free(p); }
};
struct ConfigDeleter {
  void operator()(rp_config* p) const { rp_config_free(p); }
};
struct ReportDeleter {
  void operator()(rp_report* p) const { rp_report_free(p); }
};
struct ExactDeleter {
  void operator()(rp_exact_result* p) const { rp_exact_result_free(p); }
};
using InstancePtr = std::unique_ptr<rp_instance, InstanceDeleter>;
using ConfigPtr = std::unique_ptr<rp_config, ConfigDeleter>;
using ReportPtr = std::unique_ptr<rp_report, ReportDeleter>;
using ExactPtr = std::unique_ptr<rp_exact_result, ExactDeleter>;

InstancePtr LoadInstance(const std::string& path) {
  rp_instance* raw = nullptr;
  Check(rp_instance_load(path.c_str(), &raw));
  return InstancePtr(raw);
}

std::string JoinPrices(const std::vector<int64_t>& prices) {
  std::string out;
  for (size_t i = 0; i < prices.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(prices[i]);
  }
  return out;
}

std::vector<int64_t> ParsePrices(const std::string& text) {
  std::vector<int64_t> prices;
  size_t start = 0;
  while (true) {
    const size_t comma = text.find(',', start);
    const std::string item = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    char* end = nullptr;
    errno = 0;
    const long long v = std::strtoll(item.c_str(), &end, 10);
    while (end != nullptr && (*end == ' ' || *end == '\t')) ++end;
    if (item.empty() || errno != 0 || end == item.c_str() || *end != '\0') {
      throw CLI::ValidationError("--prices", "not an integer: '" + item + "'");
    }
    prices.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return prices;
}

struct SearchOptions {
  std::string method = "vns";
  std::string init = "random";
  std::string pipeline = "-";
  int l0 = 0;
  int q = 0;
  int t = 0;
  int64_t max_points = 0;
  double time_limit = 0.0;
  int64_t iterations = 0;
  bool vns_reset_radius = false;
  bool parents_with_replacement = false;
  bool dedup = false;
  CLI::Option* l0_opt = nullptr;
  CLI::Option* q_opt = nullptr;
  CLI::Option* t_opt = nullptr;
  CLI::Option* max_points_opt = nullptr;
  CLI::Option* time_limit_opt = nullptr;
  CLI::Option* iterations_opt = nullptr;
};

void AddSearchOptions(CLI::App* app, SearchOptions& o) {
  app->add_option("--method", o.method, "naive, vns or genetic")
      ->capture_default_str();
  app->add_option("--init", o.init, "random or greedy")->capture_default_str();
  app->add_option("--local-search", o.pipeline,
                  "pipeline letters from sfrco, '-' for none")
      ->capture_default_str();
  o.l0_opt = app->add_option("--l0", o.l0, "initial population size");
  o.q_opt = app->add_option("--q", o.q, "elite set size");
  o.t_opt = app->add_option("--t", o.t, "batch size per iteration");
  o.max_points_opt =
      app->add_option("--max-points", o.max_points, "point budget");
  o.time_limit_opt =
      app->add_option("--time-limit", o.time_limit, "wall-clock seconds");
  o.iterations_opt =
      app->add_option("--iterations", o.iterations, "number of batches");
  o.max_points_opt->excludes(o.time_limit_opt)->excludes(o.iterations_opt);
  o.time_limit_opt->excludes(o.iterations_opt);
  app->add_flag("--vns-reset-radius", o.vns_reset_radius,
                "reset the VNS radius after an improvement");
  app->add_flag("--parents-with-replacement", o.parents_with_replacement,
                "allow identical genetic parents");
  app->add_flag("--dedup", o.dedup, "skip vectors already in the population");
}

ConfigPtr MakeConfig(const SearchOptions& o) {
  rp_config* raw = nullptr;
  Check(rp_config_create(o.method.c_str(), &raw));
  ConfigPtr config(raw);
  Check(rp_config_set_string(raw, "init", o.init.c_str()));
  Check(rp_config_set_string(raw, "pipeline", o.pipeline.c_str()));
  if (*o.l0_opt) Check(rp_config_set_int(raw, "l0", o.l0));
  if (*o.q_opt) Check(rp_config_set_int(raw, "q", o.q));
  if (*o.t_opt) Check(rp_config_set_int(raw, "t", o.t));
  if (*o.max_points_opt) Check(rp_config_set_int(raw, "max_points", o.max_points));
  if (*o.time_limit_opt) {
    Check(rp_config_set_double(raw, "time_limit", o.time_limit));
  }
  if (*o.iterations_opt) Check(rp_config_set_int(raw, "iterations", o.iterations));
  Check(rp_config_set_int(raw, "vns_reset_radius", o.vns_reset_radius));
  Check(rp_config_set_int(raw, "parents_with_replacement",
                          o.parents_with_replacement));
  Check(rp_config_set_int(raw, "dedup", o.dedup));
  return config;
}

std::vector<int64_t> RunPrices(const rp_report* report, size_t run,
                               int num_products) {
  std::vector<int64_t> prices(num_products);
  Check(rp_report_run_prices(report, run, prices.data(), prices.size()));
  return prices;
}

void PrintSummary(const rp_report* report) {
  rp_summary s;
  Check(rp_report_summary(report, &s));
  std::printf("runs %zu\n", s.count);
  std::printf("min %" PRId64 " q1 %" PRId64 " median %" PRId64 " q3 %" PRId64
              " max %" PRId64 "\n",
              s.min, s.q1, s.median, s.q3, s.max);
  std::printf("mean %.4f variance %.4f\n", s.mean, s.variance);
  if (s.has_reference) {
    std::printf("reference %" PRId64 " hit_rate %.4f ratio_min %.6f "
                "ratio_max %.6f\n",
                s.reference, s.hit_rate, s.min_ratio, s.max_ratio);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rank pricing heuristics, exact oracle and benchmarks"};
  app.require_subcommand(1);

  // solve
  CLI::App* solve = app.add_subcommand("solve", "Run one seeded search");
  std::string solve_instance;
  uint64_t solve_seed = 0;
  std::string solve_out;
  SearchOptions solve_opts;
  solve->add_option("--instance", solve_instance, "instance JSON")->required();
  AddSearchOptions(solve, solve_opts);
  solve->add_option("--seed", solve_seed, "RNG seed")->capture_default_str();
  solve->add_option("--out", solve_out, "directory for CSV output");

  // bench
  CLI::App* bench = app.add_subcommand("bench", "Run many seeded searches");
  std::string bench_instance, bench_config, bench_out;
  int bench_runs = 0, bench_workers = 0;
  int64_t bench_reference = 0;
  bench->add_option("--config", bench_config, "experiment config JSON")
      ->required();
  CLI::Option* bench_instance_opt =
      bench->add_option("--instance", bench_instance, "overrides instance_path");
  CLI::Option* bench_runs_opt =
      bench->add_option("--runs", bench_runs, "overrides runs");
  CLI::Option* bench_workers_opt =
      bench->add_option("--workers", bench_workers, "overrides workers");
  CLI::Option* bench_out_opt =
      bench->add_option("--out", bench_out, "overrides out_dir");
  CLI::Option* bench_reference_opt = bench->add_option(
      "--reference", bench_reference, "reference value for hit rate");

  // gen
  CLI::App* gen = app.add_subcommand("gen", "Generate a synthetic instance");
  int gen_products = 0, gen_customers = 0;
  int64_t gen_lo = 0, gen_hi = 0;
  double gen_avail = 1.0;
  uint64_t gen_seed = 0;
  std::string gen_out;
  gen->add_option("--products", gen_products)->required();
  gen->add_option("--customers", gen_customers)->required();
  gen->add_option("--budget-lo", gen_lo)->required();
  gen->add_option("--budget-hi", gen_hi)->required();
  gen->add_option("--avail", gen_avail, "availability probability")
      ->capture_default_str();
  gen->add_option("--seed", gen_seed)->capture_default_str();
  gen->add_option("--out", gen_out, "output path, stdout when omitted");

  // exact
  CLI::App* exact = app.add_subcommand("exact", "Enumerate the budget grid");
  std::string exact_instance;
  uint64_t exact_cap = 0;
  int exact_workers = 1;
  exact->add_option("--instance", exact_instance)->required();
  exact->add_option("--cap", exact_cap, "max vectors, 0 for 10^7");
  exact->add_option("--workers", exact_workers)->capture_default_str();

  // export-lp
  CLI::App* export_lp =
      app.add_subcommand("export-lp", "Write the single-level LP model");
  std::string lp_instance, lp_out;
  export_lp->add_option("--instance", lp_instance)->required();
  export_lp->add_option("--out", lp_out, "output path, stdout when omitted");

  // eval
  CLI::App* eval = app.add_subcommand("eval", "Evaluate one price vector");
  std::string eval_instance, eval_prices, eval_pipeline;
  uint64_t eval_seed = 0;
  eval->add_option("--instance", eval_instance)->required();
  eval->add_option("--prices", eval_prices, "comma separated, one per product")
      ->required();
  eval->add_option("--local-search", eval_pipeline,
                   "apply a pipeline first (prices must be budgets)");
  eval->add_option("--seed", eval_seed, "seed for the o step")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) {
      InstancePtr instance = LoadInstance(solve_instance);
      ConfigPtr config = MakeConfig(solve_opts);
      Check(rp_config_set_int(config.get(), "runs", 1));
      Check(rp_config_set_int(config.get(), "base_seed",
                              static_cast<int64_t>(solve_seed)));
      if (!solve_out.empty()) {
        Check(rp_config_set_string(config.get(), "out_dir", solve_out.c_str()));
      }
      rp_report* raw = nullptr;
      Check(rp_run_experiment(config.get(), instance.get(), &raw));
      ReportPtr report(raw);
      rp_run_info run;
      Check(rp_report_run(raw, 0, &run));
      const auto prices =
          RunPrices(raw, 0, rp_instance_num_products(instance.get()));
      std::printf("best_value %" PRId64 "\n", run.best_value);
      std::printf("best_prices %s\n", JoinPrices(prices).c_str());
      std::printf("evals %" PRId64 "\n", run.evals);
      std::printf("ls_evals %" PRId64 "\n", run.ls_evaluations);
      std::printf("elapsed_ms %.3f\n", run.elapsed_ms);
    } else if (*bench) {
      rp_config* raw_config = nullptr;
      Check(rp_config_load(bench_config.c_str(), &raw_config));
      ConfigPtr config(raw_config);
      if (*bench_instance_opt) {
        Check(rp_config_set_string(raw_config, "instance_path",
                                   bench_instance.c_str()));
      }
      if (*bench_runs_opt) Check(rp_config_set_int(raw_config, "runs", bench_runs));
      if (*bench_workers_opt) {
        Check(rp_config_set_int(raw_config, "workers", bench_workers));
      }
      if (*bench_out_opt) {
        Check(rp_config_set_string(raw_config, "out_dir", bench_out.c_str()));
      }
      if (*bench_reference_opt) {
        Check(rp_config_set_int(raw_config, "reference", bench_reference));
      }
      rp_report* raw = nullptr;
      Check(rp_run_experiment(raw_config, nullptr, &raw));
      ReportPtr report(raw);
      PrintSummary(raw);
    } else if (*gen) {
      rp_instance* raw = nullptr;
      Check(rp_instance_generate(gen_products, gen_customers, gen_lo, gen_hi,
                                 gen_avail, gen_seed, &raw));
      InstancePtr instance(raw);
      if (gen_out.empty()) {
        char* text = nullptr;
        Check(rp_instance_to_json(raw, &text));
        std::fputs(text, stdout);
        rp_string_free(text);
      } else {
        Check(rp_instance_save(raw, gen_out.c_str()));
      }
    } else if (*exact) {
      InstancePtr instance = LoadInstance(exact_instance);
      rp_exact_result* raw = nullptr;
      Check(rp_brute_force(instance.get(), exact_cap, exact_workers, &raw));
      ExactPtr result(raw);
      std::printf("optimum %" PRId64 "\n", rp_exact_optimum(raw));
      std::printf("evaluated %" PRIu64 "\n", rp_exact_evaluated(raw));
      const int n = rp_instance_num_products(instance.get());
      for (size_t j = 0; j < rp_exact_num_optima(raw); ++j) {
        std::vector<int64_t> prices(n);
        Check(rp_exact_optimum_prices(raw, j, prices.data(), prices.size()));
        std::printf("optimal %s\n", JoinPrices(prices).c_str());
      }
    } else if (*export_lp) {
      InstancePtr instance = LoadInstance(lp_instance);
      if (lp_out.empty()) {
        char* text = nullptr;
        Check(rp_export_lp_string(instance.get(), &text));
        std::fputs(text, stdout);
        rp_string_free(text);
      } else {
        Check(rp_export_lp(instance.get(), lp_out.c_str()));
      }
    } else if (*eval) {
      InstancePtr instance = LoadInstance(eval_instance);
      std::vector<int64_t> prices = ParsePrices(eval_prices);
      if (!eval_pipeline.empty()) {
        Check(rp_local_search(instance.get(), eval_pipeline.c_str(), eval_seed,
                              prices.data(), prices.size(), nullptr));
        std::printf("prices %s\n", JoinPrices(prices).c_str());
      }
      const int k_count = rp_instance_num_customers(instance.get());
      std::vector<int32_t> chosen(k_count);
      int64_t revenue = 0;
      Check(rp_evaluate(instance.get(), prices.data(), prices.size(), &revenue,
                        chosen.data(), chosen.size()));
      for (int k = 0; k < k_count; ++k) {
        if (chosen[k] < 0) {
          std::printf("customer %d none\n", k + 1);
        } else {
          std::printf("customer %d product %d price %" PRId64 "\n", k + 1,
                      chosen[k] + 1, prices[chosen[k]]);
        }
      }
      std::printf("revenue %" PRId64 "\n", revenue);
    }
  } catch (const CallFailed& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const CLI::Error& e) {
    return app.exit(e);
  }
  return 0;
}
