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

#include "mvbp/instance_io.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <random>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

namespace mvbp {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

void RequireKeys(const json& object, std::string_view where,
                 std::initializer_list<std::string_view> required,
                 std::initializer_list<std::string_view> optional) {
  if (!object.is_object()) {
    throw ParseError(fmt::format("{}: expected an object", where));
  }
  for (std::string_view key : required) {
    if (!object.contains(key)) {
      throw ParseError(fmt::format("{}: missing \"{}\"", where, key));
    }
  }
  for (const auto& [key, value] : object.items()) {
    bool known = false;
    for (std::string_view k : required) known = known || k == key;
    for (std::string_view k : optional) known = known || k == key;
    if (!known) {
      throw ParseError(fmt::format("{}: unknown field \"{}\"", where, key));
    }
  }
}

double Number(const json& value, std::string_view where) {
  if (!value.is_number()) {
    throw ParseError(fmt::format("{}: expected a number", where));
  }
  return value.get<double>();
}

int Integer(const json& value, std::string_view where) {
  if (!value.is_number_integer()) {
    throw ParseError(fmt::format("{}: expected an integer", where));
  }
  return value.get<int>();
}

std::vector<double> NumberArray(const json& value, std::string_view where) {
  if (!value.is_array()) {
    throw ParseError(fmt::format("{}: expected an array", where));
  }
  std::vector<double> out;
  for (const json& v : value) out.push_back(Number(v, where));
  return out;
}

json Parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(fmt::format("malformed JSON: {}", e.what()));
  }
}

ordered_json AssignmentsJson(const std::vector<Assignment>& assignments) {
  ordered_json out = ordered_json::array();
  for (const Assignment& a : assignments) {
    out.push_back({{"item", a.item}, {"incarnation", a.incarnation}});
  }
  return out;
}

}  // namespace

InstanceFile ParseInstance(std::string_view text) {
  const json root = Parse(text);
  RequireKeys(root, "instance", {"dimension", "items", "bin_types"},
              {"metadata"});
  InstanceFile file;
  Instance& inst = file.instance;
  inst.dimension = Integer(root["dimension"], "dimension");
  if (!root["items"].is_array() || !root["bin_types"].is_array()) {
    throw ParseError("items and bin_types must be arrays");
  }
  for (size_t i = 0; i < root["items"].size(); ++i) {
    const json& item = root["items"][i];
    const std::string where = fmt::format("items[{}]", i);
    RequireKeys(item, where, {"incarnations"}, {});
    if (!item["incarnations"].is_array()) {
      throw ParseError(where + ".incarnations: expected an array");
    }
    Item parsed;
    for (size_t j = 0; j < item["incarnations"].size(); ++j) {
      const json& inc = item["incarnations"][j];
      const std::string at = fmt::format("{}.incarnations[{}]", where, j);
      RequireKeys(inc, at, {"sizes"}, {"weight"});
      Incarnation out;
      out.sizes = NumberArray(inc["sizes"], at + ".sizes");
      if (inc.contains("weight")) out.weight = Number(inc["weight"], at);
      parsed.incarnations.push_back(std::move(out));
    }
    inst.items.push_back(std::move(parsed));
  }
  for (size_t t = 0; t < root["bin_types"].size(); ++t) {
    const json& type = root["bin_types"][t];
    const std::string where = fmt::format("bin_types[{}]", t);
    RequireKeys(type, where, {"capacities"}, {"weight"});
    BinType out;
    out.capacities = NumberArray(type["capacities"], where + ".capacities");
    if (type.contains("weight")) out.weight = Number(type["weight"], where);
    inst.bin_types.push_back(std::move(out));
  }
  if (root.contains("metadata")) file.metadata = root["metadata"];
  return file;
}

std::string SerializeInstance(const InstanceFile& file) {
  const Instance& inst = file.instance;
  ordered_json root;
  root["dimension"] = inst.dimension;
  root["items"] = ordered_json::array();
  for (const Item& item : inst.items) {
    ordered_json incs = ordered_json::array();
    for (const Incarnation& inc : item.incarnations) {
      incs.push_back({{"sizes", inc.sizes}, {"weight", inc.weight}});
    }
    root["items"].push_back({{"incarnations", std::move(incs)}});
  }
  root["bin_types"] = ordered_json::array();
  for (const BinType& type : inst.bin_types) {
    root["bin_types"].push_back(
        {{"capacities", type.capacities}, {"weight", type.weight}});
  }
  if (!file.metadata.is_null()) {
    root["metadata"] = ordered_json::parse(file.metadata.dump());
  }
  return root.dump(1) + "\n";
}

std::string SerializeInstance(const Instance& instance) {
  return SerializeInstance(InstanceFile{instance, {}});
}

Packing ParsePacking(std::string_view text) {
  const json root = Parse(text);
  RequireKeys(root, "packing", {"bins"}, {});
  if (!root["bins"].is_array()) throw ParseError("bins: expected an array");
  Packing packing;
  for (size_t b = 0; b < root["bins"].size(); ++b) {
    const json& bin = root["bins"][b];
    const std::string where = fmt::format("bins[{}]", b);
    RequireKeys(bin, where, {"bin_type", "assignments"}, {});
    Bin out;
    out.bin_type = Integer(bin["bin_type"], where + ".bin_type");
    if (!bin["assignments"].is_array()) {
      throw ParseError(where + ".assignments: expected an array");
    }
    for (const json& a : bin["assignments"]) {
      RequireKeys(a, where + ".assignments", {"item", "incarnation"}, {});
      out.assignments.push_back(
          {Integer(a["item"], where), Integer(a["incarnation"], where)});
    }
    packing.bins.push_back(std::move(out));
  }
  return packing;
}

std::string SerializePacking(const Packing& packing) {
  ordered_json root;
  root["bins"] = ordered_json::array();
  for (const Bin& bin : packing.bins) {
    root["bins"].push_back({{"bin_type", bin.bin_type},
                            {"assignments", AssignmentsJson(bin.assignments)}});
  }
  return root.dump(1) + "\n";
}

std::string SerializeSelection(const KnapsackSelection& selection) {
  ordered_json root;
  root["value"] = selection.value;
  root["chosen"] = AssignmentsJson(selection.chosen);
  return root.dump(1) + "\n";
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(fmt::format("cannot open {}", path));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::optional<std::string> CheckGeneratorParams(const GeneratorParams& p) {
  if (p.num_items < 0) return "n must be >= 0";
  if (p.max_incarnations < 1) return "m must be >= 1";
  if (p.dimension < 1) return "D must be >= 1";
  if (p.num_bin_types < 1) return "T must be >= 1";
  if (!(p.size_lo >= 0.0) || !(p.size_hi >= p.size_lo)) {
    return "size range must satisfy 0 <= lo <= hi";
  }
  if (!(p.size_lo <= 1.0)) return "size lo must be <= 1 so items fit";
  if (!(p.capacity_lo > 0.0) || !(p.capacity_lo <= 1.0)) {
    return "capacity lo must be in (0, 1]";
  }
  if (!(p.weight_lo >= 0.0) || !(p.weight_hi >= p.weight_lo)) {
    return "weight range must satisfy 0 <= lo <= hi";
  }
  if (p.decimals < 0 || p.decimals > 12) return "decimals must be in [0, 12]";
  return std::nullopt;
}

InstanceFile GenerateInstance(const GeneratorParams& p) {
  if (auto problem = CheckGeneratorParams(p)) {
    throw std::invalid_argument(*problem);
  }
  std::mt19937_64 rng(p.seed);
  const double scale = std::pow(10.0, p.decimals);
  // 53 random bits -> [0, 1); independent of the standard library's
  // distribution implementations.
  auto uniform = [&](double lo, double hi) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return std::round((lo + (hi - lo) * u) * scale) / scale;
  };

  InstanceFile file;
  Instance& inst = file.instance;
  inst.dimension = p.dimension;
  for (int t = 0; t < p.num_bin_types; ++t) {
    BinType type;
    type.capacities.assign(p.dimension, 1.0);
    if (t > 0) {
      for (double& c : type.capacities) {
        c = std::max(uniform(p.capacity_lo, 1.0), 1.0 / scale);
      }
      if (p.weighted_bins) type.weight = uniform(p.weight_lo, p.weight_hi);
    }
    inst.bin_types.push_back(std::move(type));
  }
  for (int i = 0; i < p.num_items; ++i) {
    Item item;
    const int m = 1 + static_cast<int>(rng() % p.max_incarnations);
    for (int j = 0; j < m; ++j) {
      Incarnation inc;
      for (int attempt = 0;; ++attempt) {
        if (attempt == 10000) {
          throw std::invalid_argument("size range never fits any bin type");
        }
        inc.sizes.clear();
        for (int d = 0; d < p.dimension; ++d) {
          inc.sizes.push_back(uniform(p.size_lo, p.size_hi));
        }
        bool fits = false;
        for (const BinType& type : inst.bin_types) {
          bool here = true;
          for (int d = 0; d < p.dimension; ++d) {
            here = here && inc.sizes[d] <= type.capacities[d];
          }
          fits = fits || here;
        }
        if (fits) break;
      }
      inc.weight = uniform(1.0, 10.0);
      item.incarnations.push_back(std::move(inc));
    }
    inst.items.push_back(std::move(item));
  }
  file.metadata = {
      {"seed", p.seed},
      {"generator",
       {{"n", p.num_items},
        {"m", p.max_incarnations},
        {"D", p.dimension},
        {"T", p.num_bin_types},
        {"size_lo", p.size_lo},
        {"size_hi", p.size_hi},
        {"capacity_lo", p.capacity_lo},
        {"weighted_bins", p.weighted_bins}}}};
  return file;
}

}  // namespace mvbp
