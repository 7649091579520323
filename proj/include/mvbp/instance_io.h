// Copyright 2026 The mvbp Authors
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

// JSON instance and packing files, and the seeded instance generator.
//
// Instance file:
//   {"dimension": D,
//    "items": [{"incarnations": [{"sizes": [...], "weight": w}, ...]}, ...],
//    "bin_types": [{"capacities": [...], "weight": w}, ...],
//    "metadata": {"name": ..., "seed": ..., "generator": {...}}}
// "weight" defaults to 1 and "metadata" is optional. Unknown keys are
// rejected at every level except inside "metadata".
//
// Packing file:
//   {"bins": [{"bin_type": t,
//              "assignments": [{"item": i, "incarnation": j}, ...]}, ...]}
//
// Selection file (knapsack results):
//   {"value": v, "chosen": [{"item": i, "incarnation": j}, ...]}

#ifndef MVBP_INSTANCE_IO_H_
#define MVBP_INSTANCE_IO_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "mvbp/model.h"

namespace mvbp {

class ParseError : public Error {
 public:
  using Error::Error;
};

struct InstanceFile {
  Instance instance;
  // Free-form; preserved verbatim through a round trip.
  nlohmann::json metadata;
};

InstanceFile ParseInstance(std::string_view text);
std::string SerializeInstance(const InstanceFile& file);
std::string SerializeInstance(const Instance& instance);

Packing ParsePacking(std::string_view text);
std::string SerializePacking(const Packing& packing);

std::string SerializeSelection(const KnapsackSelection& selection);

// Reads a whole file; throws ParseError when it cannot be opened.
std::string ReadFile(const std::string& path);

struct GeneratorParams {
  int num_items = 8;
  int max_incarnations = 2;
  int dimension = 2;
  int num_bin_types = 1;
  double size_lo = 0.05;
  double size_hi = 0.6;
  // Extra bin types draw each capacity from [capacity_lo, 1]; type 0 is
  // always the unit bin.
  double capacity_lo = 0.5;
  // Bin-type weights: all 1 unless weighted, then type 0 has weight 1 and
  // the rest draw from [weight_lo, weight_hi].
  bool weighted_bins = false;
  double weight_lo = 0.3;
  double weight_hi = 1.5;
  // Incarnation weights (knapsack profits) draw from [1, 10].
  uint64_t seed = 1;
  // Every value is rounded to this many decimals.
  int decimals = 4;
};

// Empty when valid; otherwise the first problem found.
std::optional<std::string> CheckGeneratorParams(const GeneratorParams& params);

// Deterministic for fixed params. Each incarnation is redrawn until it fits
// alone in at least one bin type, so every item is packable. Throws
// std::invalid_argument on invalid params.
InstanceFile GenerateInstance(const GeneratorParams& params);

}  // namespace mvbp

#endif  // MVBP_INSTANCE_IO_H_
