// Copyright 2026 The cuelearn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cuelearn/synth.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <random>

#include "cuelearn/error.h"
#include "json.hpp"
#include "random_util.h"

namespace cuelearn::synth {
namespace {

using corpus::CuePosition;
using corpus::RelationFeatures;
using corpus::RelationRecord;
using corpus::Subset;
using corpus::Target;
using nlohmann::ordered_json;

constexpr int kMaxDraws = 100000;

Marginal uniform(std::vector<std::string> values) {
  Marginal marginal;
  const double p = 1.0 / static_cast<double>(values.size());
  for (auto& v : values) marginal.emplace_back(std::move(v), p);
  return marginal;
}

std::vector<std::string> class_names(Target target) {
  const auto& names = target == Target::kOccurrence
                          ? corpus::kOccurrenceClasses
                          : corpus::kPlacementClasses;
  return {std::string(names[0]), std::string(names[1])};
}

bool parse_count(std::string_view text, int& out) {
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size() && out >= 0;
}

// Checks that `value` is a legal value of feature `name`.
bool legal_value(std::string_view name, const std::string& value) {
  if (name == "trib_pos") {
    try {
      corpus::parse_trib_pos(value);
      return true;
    } catch (const InputError&) {
      return false;
    }
  }
  if (name == "inten_structure" || name == "infor_structure") {
    return !value.empty();
  }
  if (name == "inten_rel") return corpus::parse_inten_rel(value).has_value();
  if (name == "info_rel") return corpus::parse_info_rel(value).has_value();
  if (name == "syn_rel") return corpus::parse_syn_rel(value).has_value();
  if (name == "adjacency") return value == "true" || value == "false";
  if (name == "core_type" || name == "trib_type") {
    return corpus::parse_unit_type(value).has_value();
  }
  int count = 0;
  if (name == "above" || name == "below") return parse_count(value, count);
  return false;
}

bool is_feature(std::string_view name) {
  return std::find(corpus::kFeatureNames.begin(), corpus::kFeatureNames.end(),
                   name) != corpus::kFeatureNames.end();
}

// Marginal restricted to values a record of `subset` may take, renormalized.
Marginal restrict_for(const std::string& name, const Marginal& marginal,
                      Subset subset) {
  Marginal kept;
  for (const auto& [value, p] : marginal) {
    if (p <= 0) continue;
    if (name == "info_rel" && value == "temporal") continue;
    if (name == "trib_pos") {
      const auto side = corpus::parse_trib_pos(value).side();
      if (subset == Subset::kCore1 && side != corpus::Side::kAfter) continue;
      if (subset == Subset::kCore2 && side != corpus::Side::kBefore) continue;
    }
    kept.emplace_back(value, p);
  }
  if (kept.empty()) {
    throw InputError("marginal for '" + name + "' leaves no legal value for " +
                     std::string(corpus::to_string(subset)));
  }
  double sum = 0;
  for (const auto& entry : kept) sum += entry.second;
  for (auto& entry : kept) entry.second /= sum;
  return kept;
}

const std::string& draw(const Marginal& marginal, std::mt19937_64& rng) {
  const double u = internal::uniform01(rng);
  double cumulative = 0;
  for (const auto& [value, p] : marginal) {
    cumulative += p;
    if (u < cumulative) return value;
  }
  return marginal.back().first;
}

RelationFeatures features_from(const std::vector<std::string>& values) {
  RelationFeatures f;
  f.trib_pos = corpus::parse_trib_pos(values[0]);
  f.inten_structure = values[1];
  f.infor_structure = values[2];
  f.inten_rel = *corpus::parse_inten_rel(values[3]);
  f.info_rel = *corpus::parse_info_rel(values[4]);
  f.syn_rel = *corpus::parse_syn_rel(values[5]);
  f.adjacency = values[6] == "true";
  f.core_type = *corpus::parse_unit_type(values[7]);
  f.trib_type = *corpus::parse_unit_type(values[8]);
  parse_count(values[9], f.above);
  parse_count(values[10], f.below);
  return f;
}

bool rule_covers(const PlantedRule& rule, Subset subset) {
  return std::find(rule.subsets.begin(), rule.subsets.end(), subset) !=
         rule.subsets.end();
}

std::string record_class(const RelationRecord& record, Target target) {
  if (target == Target::kOccurrence) return record.cued ? "cued" : "not_cued";
  return record.cue_position == CuePosition::kOnCore ? "on_core" : "on_trib";
}

std::string id_for(Subset subset, int index) {
  char buffer[16];
  std::snprintf(buffer, sizeof(buffer), "%04d", index);
  return std::string(corpus::to_string(subset)) + "-" + buffer;
}

[[noreturn]] void bad_spec(const std::string& message) {
  throw InputError("synth spec: " + message);
}

}  // namespace

std::string PlantedRule::apply(const RelationFeatures& features) const {
  for (const auto& c : cases) {
    bool match = true;
    for (const auto& [name, accepted] : c.when) {
      if (!accepted.contains(corpus::feature_value(features, name))) {
        match = false;
        break;
      }
    }
    if (match) return c.then;
  }
  return otherwise;
}

std::map<std::string, Marginal> default_marginals() {
  std::map<std::string, Marginal> marginals;
  std::vector<std::string> positions;
  for (int total = 1; total <= 3; ++total) {
    for (int before = 0; before <= total; ++before) {
      const int after = total - before;
      for (int i = 1; i <= before; ++i) {
        positions.push_back(corpus::format_trib_pos(
            corpus::TribPos(before, after, i, corpus::Side::kBefore)));
      }
      for (int i = 1; i <= after; ++i) {
        positions.push_back(corpus::format_trib_pos(
            corpus::TribPos(before, after, i, corpus::Side::kAfter)));
      }
    }
  }
  marginals["trib_pos"] = uniform(positions);
  marginals["inten_structure"] = uniform({"s1", "s2", "s3", "s4"});
  marginals["infor_structure"] = uniform({"s1", "s2", "s3", "s4"});
  marginals["inten_rel"] = {{"enable", 191.0 / 406.0},
                            {"convince", 191.0 / 406.0},
                            {"concede", 24.0 / 406.0}};
  marginals["info_rel"] = uniform({"causality", "similarity", "elaboration"});
  marginals["syn_rel"] = uniform({"independent", "coordinated",
                                  "trib_subordinate_to_core",
                                  "core_subordinate_to_trib"});
  marginals["adjacency"] = uniform({"true", "false"});
  marginals["core_type"] = uniform({"segment", "action", "state", "matrix"});
  marginals["trib_type"] = uniform({"segment", "action", "state", "matrix"});
  marginals["above"] = uniform({"0", "1", "2", "3"});
  marginals["below"] = uniform({"0", "1", "2", "3"});
  return marginals;
}

SynthSpec default_spec() {
  SynthSpec spec;
  spec.shape(Subset::kCore1) = {127, 52, 52};
  spec.shape(Subset::kCore2) = {155, 100, 43};
  spec.shape(Subset::kImplicitCore) = {124, 29, 29};
  spec.shape(Subset::kJoint) = {64, 19, 19};
  spec.shape(Subset::kCluster) = {310, 276, 276};
  spec.marginals = default_marginals();
  return spec;
}

void validate_spec(const SynthSpec& spec) {
  for (auto subset : corpus::kAllSubsets) {
    const auto& shape = spec.shape(subset);
    const auto name = std::string(corpus::to_string(subset));
    if (shape.size < 0 || shape.cued < 0 || shape.on_trib < 0) {
      bad_spec(name + ": counts must be nonnegative");
    }
    if (shape.cued > shape.size) bad_spec(name + ": cued exceeds size");
    if (shape.on_trib > shape.cued) bad_spec(name + ": on_trib exceeds cued");
    if (subset != Subset::kCore2 && shape.on_trib != shape.cued) {
      bad_spec(name + ": every cue must be on the contributor");
    }
  }
  for (const auto& name : corpus::kFeatureNames) {
    auto it = spec.marginals.find(std::string(name));
    if (it == spec.marginals.end() || it->second.empty()) {
      bad_spec("no marginal for '" + std::string(name) + "'");
    }
  }
  for (const auto& [name, marginal] : spec.marginals) {
    if (!is_feature(name)) bad_spec("marginal for unknown feature '" + name + "'");
    double sum = 0;
    for (const auto& [value, p] : marginal) {
      if (!legal_value(name, value)) {
        bad_spec("illegal value '" + value + "' for '" + name + "'");
      }
      if (!(p >= 0) || !std::isfinite(p)) {
        bad_spec("negative probability in '" + name + "'");
      }
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-6) {
      bad_spec("marginal for '" + name + "' does not sum to 1");
    }
  }
  for (const auto& rule : spec.rules) {
    const auto classes = class_names(rule.target);
    auto known_class = [&](const std::string& c) {
      return std::find(classes.begin(), classes.end(), c) != classes.end();
    };
    if (!(rule.noise >= 0 && rule.noise < 1)) bad_spec("noise must be in [0, 1)");
    if (rule.subsets.empty()) bad_spec("rule applies to no subset");
    for (auto subset : rule.subsets) {
      if (!corpus::is_core_contributor(subset)) {
        bad_spec("rules only apply to core:contributor subsets");
      }
      if (rule.target == Target::kPlacement && subset != Subset::kCore2) {
        bad_spec("placement rules only apply to core2");
      }
    }
    if (!known_class(rule.otherwise)) {
      bad_spec("unknown class '" + rule.otherwise + "'");
    }
    std::set<std::string> used;
    for (const auto& c : rule.cases) {
      if (!known_class(c.then)) bad_spec("unknown class '" + c.then + "'");
      for (const auto& [name, values] : c.when) {
        if (!is_feature(name)) bad_spec("rule tests unknown feature '" + name + "'");
        for (const auto& value : values) {
          if (!legal_value(name, value)) {
            bad_spec("rule value '" + value + "' is illegal for '" + name + "'");
          }
        }
        used.insert(name);
      }
    }
    if (used.size() > 2) bad_spec("a rule may test at most two features");
  }
}

std::vector<RelationRecord> generate_corpus(const SynthSpec& spec) {
  validate_spec(spec);
  std::mt19937_64 rng(spec.seed);
  std::vector<RelationRecord> records;
  for (auto subset : corpus::kAllSubsets) {
    const auto& shape = spec.shape(subset);
    if (shape.size == 0) continue;

    // 0 = uncued, 1 = cue on contributor, 2 = cue on core.
    std::vector<int> status(shape.size, 0);
    for (int i = 0; i < shape.cued; ++i) status[i] = i < shape.on_trib ? 1 : 2;
    internal::shuffle(status, rng);

    std::vector<Marginal> marginals;
    if (corpus::is_core_contributor(subset)) {
      for (const auto& name : corpus::kFeatureNames) {
        const std::string key(name);
        marginals.push_back(restrict_for(key, spec.marginals.at(key), subset));
      }
    }

    for (int i = 0; i < shape.size; ++i) {
      RelationRecord record;
      record.id = id_for(subset, i + 1);
      record.subset = subset;
      record.cued = status[i] != 0;
      record.cue_position = status[i] == 0   ? CuePosition::kNone
                            : status[i] == 1 ? CuePosition::kOnTrib
                                             : CuePosition::kOnCore;
      if (!corpus::is_core_contributor(subset)) {
        records.push_back(std::move(record));
        continue;
      }

      // Class each applicable rule must produce for this record.
      std::vector<std::pair<const PlantedRule*, std::string>> constraints;
      for (const auto& rule : spec.rules) {
        if (!rule_covers(rule, subset)) continue;
        if (rule.target == Target::kPlacement && !record.cued) continue;
        auto wanted = record_class(record, rule.target);
        if (internal::uniform01(rng) < rule.noise) {
          const auto classes = class_names(rule.target);
          wanted = wanted == classes[0] ? classes[1] : classes[0];
        }
        constraints.emplace_back(&rule, std::move(wanted));
      }

      bool satisfied = false;
      for (int attempt = 0; attempt < kMaxDraws && !satisfied; ++attempt) {
        std::vector<std::string> values;
        for (const auto& marginal : marginals) values.push_back(draw(marginal, rng));
        record.features = features_from(values);
        satisfied = std::all_of(
            constraints.begin(), constraints.end(), [&](const auto& c) {
              return c.first->apply(*record.features) == c.second;
            });
      }
      if (!satisfied) {
        throw InputError("synth spec: no feature draw satisfies the planted "
                         "rules for " + record.id);
      }
      records.push_back(std::move(record));
    }
  }
  return records;
}

SynthSpec parse_spec_json(std::string_view text) {
  SynthSpec spec = default_spec();
  try {
    const auto in = ordered_json::parse(text);
    if (!in.is_object()) bad_spec("expected a JSON object");
    for (const auto& item : in.items()) {
      const auto& key = item.key();
      if (key != "seed" && key != "subsets" && key != "marginals" &&
          key != "rules") {
        bad_spec("unknown field '" + key + "'");
      }
    }
    if (in.contains("seed")) {
      if (!in.at("seed").is_number_unsigned()) {
        bad_spec("seed must be a nonnegative integer");
      }
      spec.seed = in.at("seed").get<std::uint64_t>();
    }
    if (in.contains("subsets")) {
      spec.subsets = {};
      for (const auto& item : in.at("subsets").items()) {
        auto subset = corpus::parse_subset(item.key());
        if (!subset) bad_spec("unknown subset '" + item.key() + "'");
        const auto& s = item.value();
        SubsetShape shape;
        shape.size = s.at("size").get<int>();
        shape.cued = s.value("cued", 0);
        if (s.contains("on_trib")) {
          shape.on_trib = s.at("on_trib").get<int>();
        } else if (*subset == Subset::kCore2 && shape.cued > 0) {
          bad_spec("core2 needs an explicit 'on_trib' count");
        } else {
          shape.on_trib = shape.cued;
        }
        spec.shape(*subset) = shape;
      }
    }
    if (in.contains("marginals")) {
      for (const auto& item : in.at("marginals").items()) {
        Marginal marginal;
        for (const auto& entry : item.value().items()) {
          marginal.emplace_back(entry.key(), entry.value().get<double>());
        }
        spec.marginals[item.key()] = std::move(marginal);
      }
    }
    if (in.contains("rules")) {
      for (const auto& r : in.at("rules")) {
        PlantedRule rule;
        auto target = corpus::parse_target(r.at("target").get<std::string>());
        if (!target) bad_spec("unknown rule target");
        rule.target = *target;
        for (const auto& s : r.at("subsets")) {
          auto subset = corpus::parse_subset(s.get<std::string>());
          if (!subset) bad_spec("unknown subset '" + s.get<std::string>() + "'");
          rule.subsets.push_back(*subset);
        }
        for (const auto& c : r.at("cases")) {
          RuleCase rc;
          for (const auto& w : c.at("when").items()) {
            auto values = w.value().get<std::vector<std::string>>();
            rc.when[w.key()] = std::set<std::string>(values.begin(), values.end());
          }
          rc.then = c.at("then").get<std::string>();
          rule.cases.push_back(std::move(rc));
        }
        rule.otherwise = r.at("otherwise").get<std::string>();
        rule.noise = r.value("noise", 0.0);
        spec.rules.push_back(std::move(rule));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    bad_spec(e.what());
  }
  validate_spec(spec);
  return spec;
}

std::string format_spec_json(const SynthSpec& spec) {
  ordered_json out;
  out["seed"] = spec.seed;
  ordered_json subsets = ordered_json::object();
  for (auto subset : corpus::kAllSubsets) {
    const auto& shape = spec.shape(subset);
    ordered_json s;
    s["size"] = shape.size;
    s["cued"] = shape.cued;
    s["on_trib"] = shape.on_trib;
    subsets[std::string(corpus::to_string(subset))] = std::move(s);
  }
  out["subsets"] = std::move(subsets);
  ordered_json marginals = ordered_json::object();
  for (const auto& [name, marginal] : spec.marginals) {
    ordered_json m = ordered_json::object();
    for (const auto& [value, p] : marginal) m[value] = p;
    marginals[name] = std::move(m);
  }
  out["marginals"] = std::move(marginals);
  ordered_json rules = ordered_json::array();
  for (const auto& rule : spec.rules) {
    ordered_json r;
    r["target"] = corpus::to_string(rule.target);
    ordered_json subsets_of_rule = ordered_json::array();
    for (auto s : rule.subsets) subsets_of_rule.push_back(corpus::to_string(s));
    r["subsets"] = std::move(subsets_of_rule);
    ordered_json cases = ordered_json::array();
    for (const auto& c : rule.cases) {
      ordered_json when = ordered_json::object();
      for (const auto& [name, values] : c.when) {
        when[name] = std::vector<std::string>(values.begin(), values.end());
      }
      ordered_json rc;
      rc["when"] = std::move(when);
      rc["then"] = c.then;
      cases.push_back(std::move(rc));
    }
    r["cases"] = std::move(cases);
    r["otherwise"] = rule.otherwise;
    r["noise"] = rule.noise;
    rules.push_back(std::move(r));
  }
  out["rules"] = std::move(rules);
  return out.dump(2) + "\n";
}

}  // namespace cuelearn::synth
