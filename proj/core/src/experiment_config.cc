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


#include "codedmv/experiment_config.h"

#include <set>

#include "codedmv/errors.h"
#include "codedmv/matrix_io.h"
#include "codedmv/plan_json.h"
#include "codedmv/schemes.h"
#include "json_util.h"

namespace codedmv {
namespace {

using Json = nlohmann::json;

std::filesystem::path Resolve(const std::filesystem::path& base,
                              const std::string& p) {
  const std::filesystem::path path(p);
  return path.is_absolute() ? path : base / path;
}

double Number(const Json& obj, const char* key, double fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj.at(key).is_number()) {
    throw ParseError(std::string("\"") + key + "\" must be a number");
  }
  return obj.at(key).get<double>();
}

int Integer(const Json& obj, const char* key, int fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj.at(key).is_number_integer()) {
    throw ParseError(std::string("\"") + key + "\" must be an integer");
  }
  return obj.at(key).get<int>();
}

std::vector<double> Numbers(const Json& arr, const char* what) {
  if (!arr.is_array()) {
    throw ParseError(std::string(what) + " must be an array of numbers");
  }
  std::vector<double> out;
  for (const Json& v : arr) {
    if (!v.is_number()) {
      throw ParseError(std::string(what) + " must be an array of numbers");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

AssignmentPlan ParsePlanEntry(const Json& entry,
                              const std::filesystem::path& base) {
  if (entry.contains("path")) {
    if (!entry.at("path").is_string()) {
      throw ParseError("plan \"path\" must be a string");
    }
    return ReadPlanFile(Resolve(base, entry.at("path").get<std::string>()));
  }
  if (entry.contains("plan")) {
    return internal::PlanFromJsonValue(entry.at("plan"));
  }
  if (entry.contains("scheme")) {
    if (!entry.at("scheme").is_string()) {
      throw ParseError("\"scheme\" must be a string");
    }
    const auto name = entry.at("scheme").get<std::string>();
    const auto kind = ParseSchemeKind(name);
    if (!kind) throw ParseError("unknown scheme '" + name + "'");
    DesignRequest req;
    req.kind = *kind;
    req.n = Integer(entry, "n", -1);
    req.r = Integer(entry, "r", Integer(entry, "r_u", -1));
    req.ell_c = Integer(entry, "ell_c", -1);
    req.ell = Integer(entry, "ell", -1);
    req.delta = Integer(entry, "delta", -1);
    return Design(req);
  }
  throw ParseError("plan entry needs \"path\", \"plan\" or \"scheme\"");
}

SpeedModel ParseSpeed(const Json& s) {
  if (!s.is_object()) throw ParseError("\"speed\" must be an object");
  const std::string model = s.value("model", "shifted_exponential");
  if (model == "shifted_exponential") {
    ShiftedExponential m;
    m.shift = Number(s, "shift", m.shift);
    m.rate = Number(s, "rate", m.rate);
    if (s.contains("multipliers")) {
      m.multipliers = Numbers(s.at("multipliers"), "\"multipliers\"");
    }
    return m;
  }
  if (model == "deterministic") {
    Deterministic m;
    if (s.contains("block_times")) {
      const Json& t = s.at("block_times");
      if (t.is_number()) {
        m.block_times = {{t.get<double>()}};
      } else if (t.is_array() && !t.empty() && t.front().is_array()) {
        m.block_times.clear();
        for (const Json& row : t) {
          m.block_times.push_back(Numbers(row, "\"block_times\" row"));
        }
      } else {
        // One time per worker, reused for each of its blocks.
        m.block_times.clear();
        for (double v : Numbers(t, "\"block_times\"")) {
          m.block_times.push_back({v});
        }
      }
    }
    return m;
  }
  if (model == "halt_after") {
    HaltAfter m;
    if (s.contains("stragglers")) {
      for (double v : Numbers(s.at("stragglers"), "\"stragglers\"")) {
        if (v < 1 || v != static_cast<int>(v)) {
          throw ParseError("stragglers are 1-based worker indices");
        }
        m.stragglers.push_back(static_cast<int>(v) - 1);
      }
    }
    m.blocks_before_halt = Integer(s, "blocks_before_halt", 0);
    m.block_time = Number(s, "block_time", 1.0);
    return m;
  }
  throw ParseError("unknown speed model '" + model + "'");
}

CostModel ParseCost(const Json& c, const std::filesystem::path& base,
                    const std::vector<AssignmentPlan>& plans) {
  if (!c.is_object()) throw ParseError("\"cost\" must be an object");
  const std::string model = c.value("model", "uniform");
  if (model == "uniform") return UniformCost{};
  if (model != "sparsity_aware") {
    throw ParseError("unknown cost model '" + model + "'");
  }
  if (c.contains("matrix")) {
    if (!c.at("matrix").is_string()) {
      throw ParseError("cost \"matrix\" must be a path");
    }
    std::set<int> deltas;
    for (const auto& p : plans) deltas.insert(p.params.delta);
    if (deltas.size() != 1) {
      throw InvalidParamsError("a matrix-derived cost needs every plan to "
                               "share one delta");
    }
    return SparsityCostFromMatrix(
        ReadMatrixMarket(Resolve(base, c.at("matrix").get<std::string>())),
        *deltas.begin());
  }
  if (!c.contains("block_nnz")) {
    throw ParseError("sparsity_aware cost needs \"block_nnz\" or \"matrix\"");
  }
  SparsityAwareCost cost;
  for (double v : Numbers(c.at("block_nnz"), "\"block_nnz\"")) {
    if (v < 0 || v != static_cast<std::int64_t>(v)) {
      throw ParseError("\"block_nnz\" entries must be non-negative integers");
    }
    cost.block_nnz.push_back(static_cast<std::int64_t>(v));
  }
  cost.block_capacity = Integer(c, "block_capacity", 0);
  return cost;
}

}  // namespace

ExperimentConfig ParseExperimentConfig(std::string_view text,
                                       const std::filesystem::path& base_dir) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    if (!doc.is_object()) throw ParseError("config must be a JSON object");
    ExperimentConfig cfg;
    if (!doc.contains("plans") || !doc.at("plans").is_array() ||
        doc.at("plans").empty()) {
      throw ParseError("config needs a non-empty \"plans\" array");
    }
    std::set<std::string> seen;
    for (const Json& entry : doc.at("plans")) {
      if (!entry.is_object()) throw ParseError("plan entries are objects");
      std::string id = entry.value("id", "");
      if (id.empty()) id = "plan" + std::to_string(cfg.plans.size() + 1);
      if (id.find_first_of(",\n\"") != std::string::npos) {
        throw ParseError("plan id '" + id + "' contains CSV metacharacters");
      }
      if (!seen.insert(id).second) {
        throw ParseError("duplicate plan id '" + id + "'");
      }
      cfg.plans.push_back(ParsePlanEntry(entry, base_dir));
      cfg.plan_ids.push_back(std::move(id));
    }
    if (doc.contains("speed")) cfg.speed = ParseSpeed(doc.at("speed"));
    if (doc.contains("cost")) {
      cfg.cost = ParseCost(doc.at("cost"), base_dir, cfg.plans);
    }
    cfg.trials = Integer(doc, "trials", cfg.trials);
    if (cfg.trials < 1) throw InvalidParamsError("\"trials\" must be >= 1");
    if (doc.contains("seed")) {
      if (!doc.at("seed").is_number_unsigned()) {
        throw ParseError("\"seed\" must be a non-negative integer");
      }
      cfg.seed = doc.at("seed").get<std::uint64_t>();
    }
    return cfg;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed config: ") + e.what());
  }
}

ExperimentConfig ReadExperimentConfig(const std::filesystem::path& path) {
  return ParseExperimentConfig(ReadTextFile(path), path.parent_path());
}

}  // namespace codedmv
