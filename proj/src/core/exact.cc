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

#include "core/exact.h"

#include <algorithm>
#include <sstream>
#include <thread>

#include "core/evaluator.h"
#include "core/status.h"

namespace rankprice {

std::uint64_t SearchSpaceSize(const Instance& instance, const BudgetGrid& grid) {
  const std::uint64_t m = grid.size();
  std::uint64_t size = 1;
  for (int i = 0; i < instance.num_products(); ++i) {
    if (size > UINT64_MAX / m) return UINT64_MAX;
    size *= m;
  }
  return size;
}

namespace {

struct PartialOptimum {
  Money optimum = -1;
  std::vector<PriceVector> optima;
  std::uint64_t evaluated = 0;
};

// Enumerates all vectors whose first index is congruent to `offset` modulo
// `stride`, in lexicographic order.
PartialOptimum EnumerateSlice(const Instance& instance, const BudgetGrid& grid,
                              int offset, int stride) {
  PartialOptimum out;
  const int n = instance.num_products();
  const int top = grid.size() - 1;
  for (int first = offset; first <= top; first += stride) {
    PriceVector p;
    p.indices.assign(n, 0);
    p[0] = first;
    while (true) {
      const Money revenue = Assign(instance, grid, p).revenue;
      ++out.evaluated;
      if (revenue > out.optimum) {
        out.optimum = revenue;
        out.optima.clear();
      }
      if (revenue == out.optimum) out.optima.push_back(p);

      int i = n - 1;
      while (i >= 1 && p[i] == top) {
        p[i] = 0;
        --i;
      }
      if (i < 1) break;
      ++p[i];
    }
  }
  return out;
}

std::string Var(char kind, int a, int b) {
  return std::string(1, kind) + "_" + std::to_string(a + 1) + "_" +
         std::to_string(b + 1);
}

}  // namespace

ExactResult BruteForce(const Instance& instance, const BudgetGrid& grid,
                       std::uint64_t cap, int workers) {
  const std::uint64_t space = SearchSpaceSize(instance, grid);
  if (space > cap) {
    throw Error(ErrorCode::kSearchSpaceTooLarge,
                "search space has " +
                    (space == UINT64_MAX ? std::string("more than 2^64")
                                         : std::to_string(space)) +
                    " vectors, cap is " + std::to_string(cap));
  }
  workers = std::clamp(workers, 1, grid.size());

  std::vector<PartialOptimum> parts(workers);
  if (workers == 1) {
    parts[0] = EnumerateSlice(instance, grid, 0, 1);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        parts[w] = EnumerateSlice(instance, grid, w, workers);
      });
    }
  }

  ExactResult result;
  result.optimum = -1;
  for (const PartialOptimum& part : parts) {
    result.evaluated += part.evaluated;
    if (part.optimum > result.optimum) {
      result.optimum = part.optimum;
      result.optima.clear();
    }
    if (part.optimum == result.optimum) {
      result.optima.insert(result.optima.end(), part.optima.begin(),
                           part.optima.end());
    }
  }
  std::sort(result.optima.begin(), result.optima.end());
  return result;
}

MilpModel BuildSingleLevelModel(const Instance& instance,
                                const BudgetGrid& grid) {
  const int num_products = instance.num_products();
  const int num_customers = instance.num_customers();
  const int m_count = grid.size();
  MilpModel model;

  for (int i = 0; i < num_products; ++i) {
    for (int m = 0; m < m_count; ++m) model.v_vars.push_back(Var('v', i, m));
  }
  for (int i = 0; i < num_products; ++i) {
    for (int k = 0; k < num_customers; ++k) {
      model.x_vars.push_back(Var('x', i, k));
      if (!instance.available(k, i)) model.fixed_to_zero.push_back(Var('x', i, k));
    }
  }

  for (int i = 0; i < num_products; ++i) {
    for (int k = 0; k < num_customers; ++k) {
      for (int m = 0; m < m_count; ++m) {
        model.objective.push_back({grid.value(m), Var('v', i, m), Var('x', i, k)});
      }
    }
  }

  for (int i = 0; i < num_products; ++i) {
    Row row{"onep_" + std::to_string(i + 1), {}, Row::Sense::kLessEqual, 1};
    for (int m = 0; m < m_count; ++m) row.terms.push_back({1, Var('v', i, m)});
    model.one_price_rows.push_back(std::move(row));
  }

  for (int k = 0; k < num_customers; ++k) {
    Row row{"onec_" + std::to_string(k + 1), {}, Row::Sense::kLessEqual, 1};
    for (int i = 0; i < num_products; ++i) row.terms.push_back({1, Var('x', i, k)});
    model.one_choice_rows.push_back(std::move(row));
  }

  for (int k = 0; k < num_customers; ++k) {
    // Grid values the customer can pay.
    int affordable = 0;
    while (affordable < m_count && grid.value(affordable) <= instance.budget(k)) {
      ++affordable;
    }
    const std::string suffix =
        "_" + std::to_string(k + 1) + "_";
    for (int i = 0; i < num_products; ++i) {
      Row link{"link" + suffix + std::to_string(i + 1), {}, Row::Sense::kLessEqual, 0};
      link.terms.push_back({1, Var('x', i, k)});
      for (int m = 0; m < affordable; ++m) link.terms.push_back({-1, Var('v', i, m)});
      model.link_rows.push_back(std::move(link));

      if (!instance.available(k, i)) continue;
      Row pref{"pref" + suffix + std::to_string(i + 1), {},
               Row::Sense::kGreaterEqual, 0};
      for (int j = 0; j < num_products; ++j) {
        if (instance.available(k, j)) {
          pref.terms.push_back({instance.score(k, j), Var('x', j, k)});
        }
      }
      for (int m = 0; m < affordable; ++m) {
        pref.terms.push_back({-instance.score(k, i), Var('v', i, m)});
      }
      model.preference_rows.push_back(std::move(pref));
    }
  }
  return model;
}

namespace {

void WriteTerm(std::ostream& os, std::int64_t coefficient,
               const std::string& body, bool first) {
  if (!first) {
    os << (coefficient < 0 ? "- " : "+ ");
  } else if (coefficient < 0) {
    os << '-';
  }
  if (coefficient < 0) coefficient = -coefficient;
  if (coefficient != 1) os << coefficient << ' ';
  os << body;
}

void WriteRow(std::ostream& os, const Row& row) {
  os << ' ' << row.name << ':';
  size_t on_line = 0;
  for (size_t t = 0; t < row.terms.size(); ++t) {
    if (on_line == 8) {
      os << "\n  ";
      on_line = 0;
    } else {
      os << ' ';
    }
    WriteTerm(os, row.terms[t].coefficient, row.terms[t].variable, t == 0);
    ++on_line;
  }
  os << (row.sense == Row::Sense::kLessEqual ? " <= " : " >= ") << row.rhs
     << '\n';
}

}  // namespace

std::string ToLpFormat(const MilpModel& model, const std::string& title) {
  std::ostringstream os;
  os << "\\ " << title << "\n";
  os << "\\ link/pref rows only count prices the customer can afford.\n";
  os << "\\ Unavailable (customer, product) pairs: x fixed to 0, pref row "
        "omitted.\n";
  os << "Maximize\n obj: [";
  // LP quadratic objectives are written as [ 2Q ] / 2.
  for (size_t t = 0; t < model.objective.size(); ++t) {
    const QuadraticTerm& q = model.objective[t];
    os << (t % 6 == 0 ? "\n  " : " ");
    WriteTerm(os, 2 * q.coefficient, q.first + " * " + q.second, t == 0);
  }
  os << "\n ] / 2\n";
  os << "Subject To\n";
  for (const auto* family : {&model.one_price_rows, &model.one_choice_rows,
                             &model.link_rows, &model.preference_rows}) {
    for (const Row& row : *family) WriteRow(os, row);
  }
  if (!model.fixed_to_zero.empty()) {
    os << "Bounds\n";
    for (const std::string& var : model.fixed_to_zero) {
      os << ' ' << var << " = 0\n";
    }
  }
  os << "Binaries\n";
  size_t on_line = 0;
  for (const auto* vars : {&model.v_vars, &model.x_vars}) {
    for (const std::string& var : *vars) {
      os << ' ' << var;
      if (++on_line == 10) {
        os << '\n';
        on_line = 0;
      }
    }
  }
  if (on_line != 0) os << '\n';
  os << "End\n";
  return os.str();
}

std::string ExportSingleLevel(const Instance& instance, const BudgetGrid& grid) {
  std::string title = "rank pricing single-level model";
  if (!instance.name().empty()) {
    std::string name = instance.name();
    std::replace(name.begin(), name.end(), '\n', ' ');
    std::replace(name.begin(), name.end(), '\r', ' ');
    title += ": " + name;
  }
  title += " (I=" + std::to_string(instance.num_products()) +
           ", K=" + std::to_string(instance.num_customers()) +
           ", M=" + std::to_string(grid.size()) + ")";
  return ToLpFormat(BuildSingleLevelModel(instance, grid), title);
}

}  // namespace rankprice
