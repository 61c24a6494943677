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

#include "support/oracles.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rankprice::testing {

namespace {

const std::vector<Money> kBudgets = {18, 66, 27, 34, 66, 50, 42, 42};
const std::vector<std::vector<int>> kScores = {
    {2, 1}, {2, 1}, {1, 2}, {1, 2}, {1, 2}, {2, 1}, {2, 1}, {1, 2}};

std::vector<PreferenceRow> Rows(const std::vector<std::vector<int>>& scores) {
  std::vector<PreferenceRow> rows;
  for (const auto& s : scores) {
    PreferenceRow row;
    for (int v : s) row.push_back(v == 0 ? std::nullopt : std::optional<Score>(v));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

Instance Table1() {
  return Instance::Create("table1", 2, 8, kBudgets, Rows(kScores));
}

Instance Table1Fill() {
  auto scores = kScores;
  scores[4] = {2, 0};
  return Instance::Create("table1-fill", 2, 8, kBudgets, Rows(scores));
}

std::string DataPath(const std::string& name) {
  return std::string(RANKPRICE_SOURCE_DIR) + "/data/" + name;
}

Assignment AssignOracle(const Instance& instance, std::span<const Money> prices) {
  Assignment a;
  a.chosen.assign(instance.num_customers(), kNoProduct);
  for (int k = 0; k < instance.num_customers(); ++k) {
    // Option -1 is "buy nothing" with utility 0; scores are >= 1.
    int best = -1;
    Score best_score = 0;
    for (int i = 0; i < instance.num_products(); ++i) {
      const Score s = instance.score(k, i);
      if (s == kAbsent || prices[i] > instance.budget(k)) continue;
      if (s > best_score) {
        best = i;
        best_score = s;
      }
    }
    a.chosen[k] = best;
    if (best >= 0) a.revenue += prices[best];
  }
  return a;
}

OracleOptimum BruteForceOracle(const Instance& instance) {
  std::set<Money> distinct;
  for (int k = 0; k < instance.num_customers(); ++k) {
    distinct.insert(instance.budget(k));
  }
  const std::vector<Money> values(distinct.begin(), distinct.end());
  OracleOptimum out;
  std::vector<Money> prices(instance.num_products());
  std::function<void(int)> visit = [&](int i) {
    if (i == instance.num_products()) {
      const Money r = AssignOracle(instance, prices).revenue;
      ++out.evaluated;
      if (r > out.optimum) {
        out.optimum = r;
        out.optima.clear();
      }
      if (r == out.optimum) out.optima.push_back(prices);
      return;
    }
    for (Money v : values) {
      prices[i] = v;
      visit(i + 1);
    }
  };
  visit(0);
  return out;
}

Instance RandomInstance(std::mt19937_64& gen, int max_products,
                        int max_customers, Money max_budget,
                        double absent_prob) {
  std::uniform_int_distribution<int> products(1, max_products);
  std::uniform_int_distribution<int> customers(1, max_customers);
  std::uniform_int_distribution<Money> budget(1, max_budget);
  std::bernoulli_distribution absent(absent_prob);
  const int n = products(gen);
  const int m = customers(gen);
  std::vector<Money> budgets(m);
  for (Money& b : budgets) b = budget(gen);
  std::vector<PreferenceRow> rows(m);
  for (PreferenceRow& row : rows) {
    std::vector<Score> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), gen);
    row.assign(n, std::nullopt);
    bool any = false;
    for (int i = 0; i < n; ++i) {
      if (!absent(gen)) {
        row[i] = perm[i];
        any = true;
      }
    }
    if (!any) row[std::uniform_int_distribution<int>(0, n - 1)(gen)] = perm[0];
  }
  return Instance::Create("random", n, m, budgets, rows);
}

std::vector<Money> RandomGridPrices(std::mt19937_64& gen,
                                    const Instance& instance) {
  std::uniform_int_distribution<int> pick(0, instance.num_customers() - 1);
  std::vector<Money> prices(instance.num_products());
  for (Money& p : prices) p = instance.budget(pick(gen));
  return prices;
}

Money SortedPercentile(std::vector<Money> values, int pct) {
  std::sort(values.begin(), values.end());
  const double exact = pct / 100.0 * static_cast<double>(values.size());
  size_t rank = static_cast<size_t>(exact);
  if (static_cast<double>(rank) < exact) ++rank;
  if (rank < 1) rank = 1;
  return values[rank - 1];
}

int LpModel::CountRows(const std::string& prefix) const {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(), [&](const LpRow& r) {
    return r.name.rfind(prefix + "_", 0) == 0;
  }));
}

namespace {

std::vector<std::string> Tokens(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

bool IsNumber(const std::string& t) {
  return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) {
    return (c >= '0' && c <= '9');
  });
}

[[noreturn]] void Malformed(const std::string& what) {
  throw std::runtime_error("malformed LP: " + what);
}

// Parses "[+|-] [coef] body" sequences. body_width is 1 for linear terms and
// 3 for "a * b". A leading "-x" is split into "-" and "x" first.
template <typename Emit>
void ParseTerms(std::vector<std::string> tokens, size_t body_width, Emit emit) {
  if (!tokens.empty() && tokens[0].size() > 1 && tokens[0][0] == '-') {
    tokens[0].erase(0, 1);
    tokens.insert(tokens.begin(), "-");
  }
  size_t pos = 0;
  while (pos < tokens.size()) {
    std::int64_t sign = 1;
    if (tokens[pos] == "+" || tokens[pos] == "-") {
      sign = tokens[pos] == "-" ? -1 : 1;
      ++pos;
    }
    std::int64_t coefficient = 1;
    if (pos < tokens.size() && IsNumber(tokens[pos])) {
      coefficient = std::stoll(tokens[pos]);
      ++pos;
    }
    if (pos + body_width > tokens.size()) Malformed("truncated term");
    std::vector<std::string> body(tokens.begin() + pos,
                                  tokens.begin() + pos + body_width);
    pos += body_width;
    emit(sign * coefficient, body);
  }
}

}  // namespace

LpModel ParseLp(const std::string& text) {
  LpModel model;
  std::istringstream in(text);
  std::string line;
  enum class Section { kNone, kObjective, kConstraints, kBounds, kBinaries, kEnd };
  Section section = Section::kNone;
  std::string objective_text;
  std::string row_text;

  auto flush_row = [&] {
    if (row_text.empty()) return;
    const size_t colon = row_text.find(':');
    if (colon == std::string::npos) Malformed("row without name: " + row_text);
    LpRow row;
    row.name = Tokens(row_text.substr(0, colon)).at(0);
    std::vector<std::string> tokens = Tokens(row_text.substr(colon + 1));
    if (tokens.size() < 3) Malformed("short row " + row.name);
    row.rhs = std::stoll(tokens.back());
    row.sense = tokens[tokens.size() - 2];
    tokens.resize(tokens.size() - 2);
    ParseTerms(tokens, 1, [&](std::int64_t c, const std::vector<std::string>& b) {
      row.terms.emplace_back(c, b[0]);
    });
    model.rows.push_back(std::move(row));
    row_text.clear();
  };

  while (std::getline(in, line)) {
    if (!line.empty() && line[0] == '\\') continue;
    const std::vector<std::string> tokens = Tokens(line);
    if (tokens.empty()) continue;
    if (tokens[0] == "Maximize" || tokens[0] == "Minimize") {
      model.objective_sense = tokens[0];
      section = Section::kObjective;
      continue;
    }
    if (line == "Subject To") {
      section = Section::kConstraints;
      continue;
    }
    if (tokens[0] == "Bounds") {
      flush_row();
      section = Section::kBounds;
      continue;
    }
    if (tokens[0] == "Binaries") {
      flush_row();
      section = Section::kBinaries;
      continue;
    }
    if (tokens[0] == "End") {
      flush_row();
      section = Section::kEnd;
      continue;
    }
    switch (section) {
      case Section::kObjective:
        objective_text += " " + line;
        break;
      case Section::kConstraints:
        // Continuation lines start with two spaces; rows with one.
        if (line.rfind("  ", 0) != 0) flush_row();
        row_text += " " + line;
        break;
      case Section::kBounds:
        if (tokens.size() != 3 || tokens[1] != "=") Malformed("bound " + line);
        model.fixed[tokens[0]] = std::stoll(tokens[2]);
        break;
      case Section::kBinaries:
        model.binaries.insert(model.binaries.end(), tokens.begin(), tokens.end());
        break;
      default:
        Malformed("text outside a section: " + line);
    }
  }
  if (section != Section::kEnd) Malformed("missing End");

  // obj: [ terms ] / d
  const size_t open = objective_text.find('[');
  const size_t close = objective_text.find(']');
  if (open == std::string::npos || close == std::string::npos) {
    Malformed("objective brackets");
  }
  const std::vector<std::string> tail = Tokens(objective_text.substr(close + 1));
  if (tail.size() != 2 || tail[0] != "/") Malformed("objective divisor");
  model.objective_divisor = std::stoll(tail[1]);
  ParseTerms(Tokens(objective_text.substr(open + 1, close - open - 1)), 3,
             [&](std::int64_t c, const std::vector<std::string>& b) {
               if (b[1] != "*") Malformed("quadratic term");
               model.objective.emplace_back(c, b[0], b[2]);
             });
  return model;
}

bool RowHolds(const LpRow& row, const std::map<std::string, int>& values) {
  std::int64_t lhs = 0;
  for (const auto& [c, var] : row.terms) {
    const auto it = values.find(var);
    lhs += c * (it == values.end() ? 0 : it->second);
  }
  if (row.sense == "<=") return lhs <= row.rhs;
  if (row.sense == ">=") return lhs >= row.rhs;
  if (row.sense == "=") return lhs == row.rhs;
  return false;
}

}  // namespace rankprice::testing
