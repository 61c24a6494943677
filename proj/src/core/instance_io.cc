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

#include "core/instance_io.h"

#include <fstream>
#include <sstream>

#include "core/status.h"
#include "json.hpp"

namespace rankprice {

using nlohmann::json;

namespace {

template <typename T>
T Field(const json& doc, const char* key) {
  if (!doc.contains(key)) {
    throw Error(ErrorCode::kParse, std::string("missing field '") + key + "'");
  }
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse,
                std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

Instance InstanceFromJson(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::kParse, "expected a JSON object");

  const std::string name = doc.contains("name") && doc["name"].is_string()
                               ? doc["name"].get<std::string>()
                               : std::string();
  const int num_products = Field<int>(doc, "num_products");
  const int num_customers = Field<int>(doc, "num_customers");
  std::vector<Money> budgets = Field<std::vector<Money>>(doc, "budgets");

  const json& rows = doc.contains("preferences") ? doc["preferences"] : json();
  if (!rows.is_array()) throw Error(ErrorCode::kParse, "'preferences' must be an array");
  std::vector<PreferenceRow> preferences;
  preferences.reserve(rows.size());
  for (size_t k = 0; k < rows.size(); ++k) {
    if (!rows[k].is_array()) {
      throw Error(ErrorCode::kParse,
                  "preferences[" + std::to_string(k) + "] must be an array");
    }
    PreferenceRow row;
    for (size_t i = 0; i < rows[k].size(); ++i) {
      const json& cell = rows[k][i];
      if (cell.is_null()) {
        row.push_back(std::nullopt);
      } else if (cell.is_number_integer()) {
        row.push_back(cell.get<Score>());
      } else {
        throw Error(ErrorCode::kParse,
                    "preference (customer " + std::to_string(k + 1) +
                        ", product " + std::to_string(i + 1) +
                        ") must be an integer or null");
      }
    }
    preferences.push_back(std::move(row));
  }
  return Instance::Create(name, num_products, num_customers, std::move(budgets),
                          preferences);
}

std::string InstanceToJson(const Instance& instance) {
  const json budgets(std::vector<Money>(instance.budgets().begin(),
                                        instance.budgets().end()));
  // One customer per line keeps larger instances diffable.
  std::ostringstream os;
  os << "{\n";
  os << "  \"name\": " << json(instance.name()).dump() << ",\n";
  os << "  \"num_products\": " << instance.num_products() << ",\n";
  os << "  \"num_customers\": " << instance.num_customers() << ",\n";
  os << "  \"budgets\": " << budgets.dump() << ",\n";
  os << "  \"preferences\": [\n";
  for (int k = 0; k < instance.num_customers(); ++k) {
    os << "    [";
    for (int i = 0; i < instance.num_products(); ++i) {
      if (i > 0) os << ", ";
      if (instance.available(k, i)) {
        os << instance.score(k, i);
      } else {
        os << "null";
      }
    }
    os << "]" << (k + 1 < instance.num_customers() ? "," : "") << "\n";
  }
  os << "  ]\n}\n";
  return os.str();
}

Instance ReadInstance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInstanceRead, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kInstanceRead, "cannot read " + path);
  try {
    return InstanceFromJson(buf.str());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kParse) {
      throw Error(ErrorCode::kInstanceRead, path + ": " + e.what());
    }
    throw Error(e.code(), path + ": " + e.what());
  }
}

void WriteInstance(const Instance& instance, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kOutputWrite, "cannot open " + path);
  out << InstanceToJson(instance);
  out.flush();
  if (!out) throw Error(ErrorCode::kOutputWrite, "cannot write " + path);
}

}  // namespace rankprice
