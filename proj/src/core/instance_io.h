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

#ifndef RANKPRICE_CORE_INSTANCE_IO_H_
#define RANKPRICE_CORE_INSTANCE_IO_H_

#include <string>

#include "core/model.h"

namespace rankprice {

// Canonical instance JSON:
//   { "name": str, "num_products": I, "num_customers": K,
//     "budgets": [K ints], "preferences": [[int|null x I] x K] }
// Parse problems surface as kParse; content problems keep the validation
// code from Instance::Create.
Instance InstanceFromJson(const std::string& text);
std::string InstanceToJson(const Instance& instance);

// kInstanceRead / kOutputWrite on I/O failure.
Instance ReadInstance(const std::string& path);
void WriteInstance(const Instance& instance, const std::string& path);

}  // namespace rankprice

#endif  // RANKPRICE_CORE_INSTANCE_IO_H_
