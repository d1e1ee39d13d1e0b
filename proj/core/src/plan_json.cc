/*
 * Copyright 2026 The codedmv Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "codedmv/plan_json.h"

#include <charconv>
#include <fstream>
#include <sstream>

#include "codedmv/errors.h"
#include "json_util.h"

namespace codedmv {
namespace internal {
namespace {

int ParseBlockKey(const std::string& key) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), v);
  if (key.empty() || ec != std::errc() || ptr != key.data() + key.size() ||
      v < 1) {
    throw ParseError("coded task key '" + key +
                     "' is not a 1-based block index");
  }
  return v - 1;
}

Fp ParseCoefficient(const nlohmann::json& value) {
  if (value.is_string()) return Fp::Parse(value.get<std::string>());
  if (value.is_number_unsigned()) {
    const auto v = value.get<std::uint64_t>();
    if (v < Fp::kModulus) return Fp(v);
  }
  throw ParseError("coefficient must be a decimal field element string, got " +
                   value.dump());
}

int RequireInt(const nlohmann::json& obj, const char* key) {
  if (!obj.contains(key) || !obj.at(key).is_number_integer()) {
    throw ParseError(std::string("params.") + key + " must be an integer");
  }
  return obj.at(key).get<int>();
}

Task ParseTask(const nlohmann::json& t) {
  if (!t.is_object() || t.size() != 1) {
    throw ParseError("task must be {\"u\": b} or {\"c\": {...}}, got " +
                     t.dump());
  }
  if (t.contains("u")) {
    const auto& b = t.at("u");
    if (!b.is_number_integer() || b.get<long long>() < 1) {
      throw ParseError("uncoded task index must be a positive integer, got " +
                       b.dump());
    }
    return Task::Uncoded(b.get<int>() - 1);
  }
  if (t.contains("c")) {
    const auto& c = t.at("c");
    if (!c.is_object()) {
      throw ParseError("coded task must map block indices to coefficients");
    }
    std::map<int, Fp> coeffs;
    for (const auto& [key, value] : c.items()) {
      const int block = ParseBlockKey(key);
      if (!coeffs.emplace(block, ParseCoefficient(value)).second) {
        throw ParseError("duplicate coefficient for block " + key);
      }
    }
    return Task::Coded(std::move(coeffs));
  }
  throw ParseError("unknown task kind " + t.dump());
}

}  // namespace

OrderedJson PlanToJsonValue(const AssignmentPlan& plan) {
  const SystemParams& p = plan.params;
  OrderedJson params = {
      {"n", p.n},         {"delta", p.delta}, {"ell_u", p.ell_u},
      {"ell_c", p.ell_c}, {"r_u", p.r_u},
      {"placement", std::string(PlacementName(p.placement))}};
  OrderedJson workers = OrderedJson::array();
  for (const auto& tasks : plan.workers) {
    OrderedJson list = OrderedJson::array();
    for (const Task& t : tasks) {
      if (!t.is_coded()) {
        list.push_back({{"u", t.block() + 1}});
        continue;
      }
      OrderedJson coeffs = OrderedJson::object();
      for (const auto& [b, c] : t.coeffs()) {
        coeffs[std::to_string(b + 1)] = c.ToString();
      }
      list.push_back({{"c", std::move(coeffs)}});
    }
    workers.push_back(std::move(list));
  }
  return {{"params", std::move(params)}, {"workers", std::move(workers)}};
}

AssignmentPlan PlanFromJsonValue(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("params") ||
      !doc.contains("workers")) {
    throw ParseError("plan document needs \"params\" and \"workers\"");
  }
  const auto& params = doc.at("params");
  if (!params.is_object()) throw ParseError("\"params\" must be an object");
  AssignmentPlan plan;
  plan.params.n = RequireInt(params, "n");
  plan.params.delta = RequireInt(params, "delta");
  plan.params.ell_u = RequireInt(params, "ell_u");
  plan.params.ell_c = RequireInt(params, "ell_c");
  plan.params.r_u = RequireInt(params, "r_u");
  if (!params.contains("placement") || !params.at("placement").is_string()) {
    throw ParseError("params.placement must be a string");
  }
  const auto name = params.at("placement").get<std::string>();
  auto placement = ParsePlacement(name);
  if (!placement) throw ParseError("unknown placement '" + name + "'");
  plan.params.placement = *placement;

  const auto& workers = doc.at("workers");
  if (!workers.is_array()) throw ParseError("\"workers\" must be an array");
  for (const auto& list : workers) {
    if (!list.is_array()) throw ParseError("each worker must be a task array");
    std::vector<Task> tasks;
    for (const auto& t : list) tasks.push_back(ParseTask(t));
    plan.workers.push_back(std::move(tasks));
  }
  return plan;
}

std::string Dump(const OrderedJson& value) { return value.dump(2) + "\n"; }

}  // namespace internal

std::string PlanToJson(const AssignmentPlan& plan) {
  return internal::Dump(internal::PlanToJsonValue(plan));
}

AssignmentPlan PlanFromJson(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    return internal::PlanFromJsonValue(doc);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed plan: ") + e.what());
  }
}

AssignmentPlan ReadPlanFile(const std::filesystem::path& path) {
  return PlanFromJson(ReadTextFile(path));
}

void WritePlanFile(const std::filesystem::path& path,
                   const AssignmentPlan& plan) {
  WriteTextFile(path, PlanToJson(plan));
}

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteTextFile(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error("write failed for " + path.string());
}

}  // namespace codedmv
