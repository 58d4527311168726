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

#include "cuelearn/experiment.h"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <set>
#include <stdexcept>

#include "cuelearn/error.h"
#include "cuelearn/tree_io.h"
#include "json.hpp"

namespace cuelearn::experiment {
namespace {

using corpus::Subset;
using corpus::Target;
using evaluation::CvResult;
using evaluation::Interval;
using induction::TreeSummary;
using nlohmann::json;
using nlohmann::ordered_json;

constexpr int kReportVersion = 1;

std::size_t declaration_index(std::string_view name) {
  auto it = std::find(corpus::kFeatureNames.begin(),
                      corpus::kFeatureNames.end(), name);
  if (it == corpus::kFeatureNames.end()) {
    throw InputError("unknown feature '" + std::string(name) + "'");
  }
  return static_cast<std::size_t>(it - corpus::kFeatureNames.begin());
}

std::vector<std::string> in_declaration_order(std::vector<std::string> names) {
  std::sort(names.begin(), names.end(), [](const auto& a, const auto& b) {
    return declaration_index(a) < declaration_index(b);
  });
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return names;
}

std::string joined(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& name : names) out += (out.empty() ? "" : "+") + name;
  return out;
}

std::vector<std::string> all_feature_names() {
  return {corpus::kFeatureNames.begin(), corpus::kFeatureNames.end()};
}

// Appends a set unless one with the same attributes is already present.
void add_unique(std::vector<FeatureSet>& sets, FeatureSet set) {
  const bool present =
      std::any_of(sets.begin(), sets.end(), [&](const FeatureSet& s) {
        return s.attributes == set.attributes;
      });
  if (!present) sets.push_back(std::move(set));
}

std::vector<FeatureSet> nine_feature_sets() {
  std::vector<std::string> base;
  for (auto name : corpus::kFeatureNames) {
    if (std::find(corpus::kSegmentStructureFeatures.begin(),
                  corpus::kSegmentStructureFeatures.end(),
                  name) == corpus::kSegmentStructureFeatures.end()) {
      base.emplace_back(name);
    }
  }
  std::vector<FeatureSet> sets;
  for (auto structure : corpus::kSegmentStructureFeatures) {
    auto attributes = base;
    attributes.emplace_back(structure);
    sets.push_back({"relation+" + std::string(structure),
                    in_declaration_order(std::move(attributes))});
  }
  return sets;
}

CandidateTreeResult evaluate_candidate(const Dataset& dataset,
                                       const FeatureSet& features,
                                       const ExperimentPlan& plan) {
  const auto projected = project(dataset, features.attributes);
  CandidateTreeResult result;
  result.features = features;
  result.cv = evaluation::cross_validate(projected, plan.params, plan.cv);
  result.tree = induction::summarize(induction::train(projected, plan.params));
  return result;
}

void check_plan(const ExperimentPlan& plan) {
  plan.params.validate();
  for (const auto& set : plan.feature_sets) {
    if (set.attributes.empty()) {
      throw InputError("feature set '" + set.name + "' is empty");
    }
    for (const auto& name : set.attributes) declaration_index(name);
  }
}

void check_corpus(std::span<const corpus::RelationRecord> records) {
  const auto violations = corpus::validate_corpus(records);
  if (!violations.empty()) {
    throw InputError("corpus has " + std::to_string(violations.size()) +
                     " violation(s); first: " + violations.front().record_id +
                     " " + violations.front().rule);
  }
}

ReplicationReport run_protocol(const Dataset& dataset,
                               const ExperimentPlan& plan, bool add_pair) {
  ReplicationReport report;
  report.plan = plan;
  report.rows = static_cast<int>(dataset.size());
  report.baseline = evaluation::majority_baseline(dataset);

  for (auto name : corpus::kFeatureNames) {
    const FeatureSet single{std::string(name), {std::string(name)}};
    report.single_features.push_back(evaluate_candidate(dataset, single, plan));
  }
  std::vector<std::size_t> ranked(report.single_features.size());
  std::iota(ranked.begin(), ranked.end(), std::size_t{0});
  std::stable_sort(ranked.begin(), ranked.end(), [&](auto a, auto b) {
    return report.single_features[a].cv.mean_error <
           report.single_features[b].cv.mean_error;
  });
  for (auto i : ranked) {
    const auto& single = report.single_features[i];
    if (single.cv.observed().upper() < report.baseline) {
      report.best_features.push_back(single.features.name);
    }
  }

  std::vector<FeatureSet> sets = plan.feature_sets;
  if (sets.empty()) {
    const auto all = project(dataset, all_feature_names());
    const auto summary =
        induction::summarize(induction::train(all, plan.params));
    sets = summary.features.size() >= 2 ? enumerate_feature_sets(summary)
                                        : fixed_feature_sets();
  }
  if (add_pair) {
    std::vector<std::string> pair = {
        report.single_features[ranked[0]].features.name,
        report.single_features[ranked[1]].features.name};
    pair = in_declaration_order(std::move(pair));
    add_unique(sets, {"pair:" + joined(pair), pair});
  }
  for (const auto& set : sets) {
    report.candidates.push_back(evaluate_candidate(dataset, set, plan));
  }
  report.selected = select_best(report.candidates);
  if (report.baseline > 0) {
    report.error_reduction = evaluation::error_reduction(
        report.baseline, report.best().cv.observed());
  }
  return report;
}

// --- JSON -----------------------------------------------------------------

ordered_json cv_to_json(const CvResult& cv) {
  ordered_json out;
  out["fold_errors"] = cv.fold_errors;
  out["fold_estimated"] = cv.fold_estimated;
  out["fold_nodes"] = cv.fold_nodes;
  out["mean_error"] = cv.mean_error;
  out["halfwidth95"] = cv.halfwidth95;
  out["mean_estimated"] = cv.mean_estimated;
  out["estimated_halfwidth95"] = cv.estimated_halfwidth95;
  out["mean_nodes"] = cv.mean_nodes;
  return out;
}

CvResult cv_from_json(const json& in) {
  CvResult cv;
  cv.fold_errors = in.at("fold_errors").get<std::vector<double>>();
  cv.fold_estimated = in.at("fold_estimated").get<std::vector<double>>();
  cv.fold_nodes = in.at("fold_nodes").get<std::vector<int>>();
  cv.mean_error = in.at("mean_error").get<double>();
  cv.halfwidth95 = in.at("halfwidth95").get<double>();
  cv.mean_estimated = in.at("mean_estimated").get<double>();
  cv.estimated_halfwidth95 = in.at("estimated_halfwidth95").get<double>();
  cv.mean_nodes = in.at("mean_nodes").get<double>();
  return cv;
}

ordered_json summary_to_json(const TreeSummary& summary) {
  ordered_json out;
  out["node_count"] = summary.node_count;
  out["root"] = summary.root_attribute ? ordered_json(*summary.root_attribute)
                                       : ordered_json(nullptr);
  ordered_json features = ordered_json::array();
  for (const auto& f : summary.features) {
    features.push_back({{"name", f.name}, {"level", f.level}});
  }
  out["features"] = std::move(features);
  return out;
}

TreeSummary summary_from_json(const json& in) {
  TreeSummary summary;
  summary.node_count = in.at("node_count").get<int>();
  if (!in.at("root").is_null()) {
    summary.root_attribute = in.at("root").get<std::string>();
  }
  for (const auto& f : in.at("features")) {
    summary.features.push_back(
        {f.at("name").get<std::string>(), f.at("level").get<int>()});
  }
  return summary;
}

ordered_json feature_set_to_json(const FeatureSet& set) {
  ordered_json out;
  out["name"] = set.name;
  out["attributes"] = set.attributes;
  return out;
}

FeatureSet feature_set_from_json(const json& in) {
  return {in.at("name").get<std::string>(),
          in.at("attributes").get<std::vector<std::string>>()};
}

ordered_json candidate_to_json(const CandidateTreeResult& c) {
  ordered_json out;
  out["features"] = feature_set_to_json(c.features);
  out["cv"] = cv_to_json(c.cv);
  out["tree"] = summary_to_json(c.tree);
  return out;
}

CandidateTreeResult candidate_from_json(const json& in) {
  return {feature_set_from_json(in.at("features")), cv_from_json(in.at("cv")),
          summary_from_json(in.at("tree"))};
}

ordered_json plan_to_json(const ExperimentPlan& plan) {
  ordered_json out;
  out["target"] = corpus::to_string(plan.target);
  out["subset"] = corpus::to_string(plan.subset);
  ordered_json sets = ordered_json::array();
  for (const auto& set : plan.feature_sets) sets.push_back(feature_set_to_json(set));
  out["feature_sets"] = std::move(sets);
  out["k"] = plan.cv.k;
  out["seed"] = plan.cv.seed;
  out["stratify"] = plan.cv.stratify;
  out["params"] = dataio::params_to_json(plan.params);
  return out;
}

ExperimentPlan plan_from_json(const json& in) {
  ExperimentPlan plan;
  auto target = corpus::parse_target(in.at("target").get<std::string>());
  auto subset = corpus::parse_subset(in.at("subset").get<std::string>());
  if (!target || !subset) throw InputError("report: bad plan target or subset");
  plan.target = *target;
  plan.subset = *subset;
  for (const auto& set : in.at("feature_sets")) {
    plan.feature_sets.push_back(feature_set_from_json(set));
  }
  plan.cv.k = in.at("k").get<int>();
  plan.cv.seed = in.at("seed").get<std::uint64_t>();
  plan.cv.stratify = in.at("stratify").get<bool>();
  plan.params = dataio::params_from_json(in.at("params"));
  return plan;
}

std::string one_decimal(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.1f", value);
  return buffer;
}

std::string describe_tree(const CandidateTreeResult& c) {
  std::string out = format_interval(c.cv.observed()) + " (" +
                    std::to_string(c.tree.node_count) + " nodes)";
  for (std::size_t i = 0; i < c.tree.features.size(); ++i) {
    const auto& f = c.tree.features[i];
    out += (i ? ", " : " ") + f.name + "@" + std::to_string(f.level);
  }
  return out;
}

std::string pad(std::string text, std::size_t width) {
  if (text.size() < width) text.append(width - text.size(), ' ');
  return text;
}

}  // namespace

std::vector<FeatureSet> enumerate_feature_sets(const TreeSummary& summary) {
  if (summary.features.size() < 2) {
    throw std::invalid_argument(
        "feature set enumeration needs at least two tree features");
  }
  std::vector<FeatureSet> sets;
  sets.push_back({std::string(kAllFeaturesName), all_feature_names()});

  const std::size_t top = std::min<std::size_t>(4, summary.features.size());
  // Subsets of the top attributes by increasing size, then by the order of
  // their members in the tree.
  for (std::size_t size = 2; size <= top; ++size) {
    std::vector<bool> pick(top, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      std::vector<std::string> names;
      for (std::size_t i = 0; i < top; ++i) {
        if (pick[i]) names.push_back(summary.features[i].name);
      }
      auto ordered = in_declaration_order(names);
      add_unique(sets, {"top:" + joined(names), ordered});
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  for (auto& set : nine_feature_sets()) add_unique(sets, std::move(set));
  return sets;
}

std::vector<FeatureSet> fixed_feature_sets() {
  std::vector<FeatureSet> sets;
  sets.push_back({std::string(kAllFeaturesName), all_feature_names()});
  for (auto& set : nine_feature_sets()) sets.push_back(std::move(set));
  return sets;
}

std::size_t select_best(std::span<const CandidateTreeResult> candidates) {
  if (candidates.empty()) throw std::invalid_argument("no candidates");
  std::size_t lowest = 0;
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    if (candidates[i].cv.observed().upper() <
        candidates[lowest].cv.observed().upper()) {
      lowest = i;
    }
  }
  const auto best = candidates[lowest].cv.observed();
  std::optional<std::size_t> rooted;
  std::optional<std::size_t> simplest;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto& c = candidates[i];
    if (evaluation::significantly_better(best, c.cv.observed())) continue;
    if (!simplest || c.tree.node_count < candidates[*simplest].tree.node_count) {
      simplest = i;
    }
    if (c.tree.root_attribute == "trib_pos" &&
        (!rooted || c.tree.node_count < candidates[*rooted].tree.node_count)) {
      rooted = i;
    }
  }
  return rooted ? *rooted : *simplest;
}

ReplicationReport run_occurrence_experiment(
    std::span<const corpus::RelationRecord> records, Subset subset,
    const ExperimentPlan& plan) {
  if (!corpus::is_core_contributor(subset)) {
    throw InputError("occurrence experiments need core1, core2 or "
                     "implicit_core");
  }
  check_plan(plan);
  check_corpus(records);
  const auto partition = corpus::partition_by_subset(records);
  const auto& selected = partition[subset];
  if (selected.empty()) {
    throw InputError("no " + std::string(corpus::to_string(subset)) +
                     " records in corpus");
  }
  ExperimentPlan echoed = plan;
  echoed.target = Target::kOccurrence;
  echoed.subset = subset;
  return run_protocol(
      corpus::to_learning_dataset(selected, Target::kOccurrence), echoed,
      false);
}

ReplicationReport run_placement_experiment(
    std::span<const corpus::RelationRecord> records,
    const ExperimentPlan& plan) {
  check_plan(plan);
  check_corpus(records);
  const auto partition = corpus::partition_by_subset(records);
  const auto cued = corpus::placement_subset(partition[Subset::kCore2]);
  if (cued.empty()) throw InputError("no cued core2 records in corpus");
  ExperimentPlan echoed = plan;
  echoed.target = Target::kPlacement;
  echoed.subset = Subset::kCore2;
  return run_protocol(corpus::to_learning_dataset(cued, Target::kPlacement),
                      echoed, true);
}

ReplicationReport run_experiment(
    std::span<const corpus::RelationRecord> records,
    const ExperimentPlan& plan) {
  return plan.target == Target::kOccurrence
             ? run_occurrence_experiment(records, plan.subset, plan)
             : run_placement_experiment(records, plan);
}

std::string format_report_json(const ReplicationReport& report) {
  ordered_json out;
  out["version"] = kReportVersion;
  out["plan"] = plan_to_json(report.plan);
  out["rows"] = report.rows;
  out["baseline"] = report.baseline;
  ordered_json singles = ordered_json::array();
  for (const auto& c : report.single_features) singles.push_back(candidate_to_json(c));
  out["single_features"] = std::move(singles);
  out["best_features"] = report.best_features;
  ordered_json candidates = ordered_json::array();
  for (const auto& c : report.candidates) candidates.push_back(candidate_to_json(c));
  out["candidates"] = std::move(candidates);
  out["selected"] = report.selected;
  out["selected_name"] = report.best().features.name;
  out["error_reduction"] = report.error_reduction
                               ? ordered_json(*report.error_reduction)
                               : ordered_json(nullptr);
  return out.dump(2) + "\n";
}

ReplicationReport parse_report_json(std::string_view text) {
  try {
    const auto in = json::parse(text);
    if (in.at("version").get<int>() != kReportVersion) {
      throw InputError("unsupported report version");
    }
    ReplicationReport report;
    report.plan = plan_from_json(in.at("plan"));
    report.rows = in.at("rows").get<int>();
    report.baseline = in.at("baseline").get<double>();
    for (const auto& c : in.at("single_features")) {
      report.single_features.push_back(candidate_from_json(c));
    }
    report.best_features = in.at("best_features").get<std::vector<std::string>>();
    for (const auto& c : in.at("candidates")) {
      report.candidates.push_back(candidate_from_json(c));
    }
    report.selected = in.at("selected").get<std::size_t>();
    if (report.selected >= report.candidates.size()) {
      throw InputError("report: selected index out of range");
    }
    if (!in.at("error_reduction").is_null()) {
      report.error_reduction = in.at("error_reduction").get<double>();
    }
    return report;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
}

std::string format_interval(const Interval& interval) {
  return one_decimal(interval.mean) + "±" + one_decimal(interval.halfwidth);
}

std::string format_report_table(const ReplicationReport& report) {
  const auto& plan = report.plan;
  std::string out;
  out += "Cue " + std::string(corpus::to_string(plan.target)) + " on " +
         std::string(corpus::to_string(plan.subset)) +
         (plan.target == Target::kPlacement ? " (cued)" : "") + ": " +
         std::to_string(report.rows) + " relations, " +
         std::to_string(plan.cv.k) + "-fold cross-validation, seed " +
         std::to_string(plan.cv.seed) + "\n\n";

  out += pad("Baseline", 17) + one_decimal(report.baseline) + "\n";
  out += pad("Best features", 17);
  if (report.best_features.empty()) {
    out += "none\n";
  } else {
    for (std::size_t i = 0; i < report.best_features.size(); ++i) {
      const auto& name = report.best_features[i];
      const auto it = std::find_if(
          report.single_features.begin(), report.single_features.end(),
          [&](const auto& c) { return c.features.name == name; });
      out += (i ? ", " : "") + name + ": " + format_interval(it->cv.observed());
    }
    out += "\n";
  }
  out += pad("Best tree", 17) + describe_tree(report.best()) + "\n";
  out += pad("", 17) + "features: " + report.best().features.name + "\n";
  out += pad("Error reduction", 17) +
         (report.error_reduction ? one_decimal(*report.error_reduction) + "%"
                                 : std::string("n/a")) +
         "\n\n";

  std::size_t width = 0;
  for (const auto& c : report.candidates) {
    width = std::max(width, c.features.name.size());
  }
  for (const auto& c : report.single_features) {
    width = std::max(width, c.features.name.size());
  }
  width += 2;
  auto row = [&](const CandidateTreeResult& c, bool selected) {
    return std::string(selected ? "* " : "  ") + pad(c.features.name, width) +
           pad(format_interval(c.cv.observed()), 12) +
           pad(format_interval(c.cv.estimated()), 12) +
           pad(std::to_string(c.tree.node_count), 7) +
           c.tree.root_attribute.value_or("-") + "\n";
  };
  const std::string columns = "  " + pad("features", width) +
                              pad("observed", 12) + pad("estimated", 12) +
                              pad("nodes", 7) + "root\n";
  out += "Candidates\n" + columns;
  for (std::size_t i = 0; i < report.candidates.size(); ++i) {
    out += row(report.candidates[i], i == report.selected);
  }
  out += "\nSingle features\n" + columns;
  for (const auto& c : report.single_features) out += row(c, false);
  return out;
}

}  // namespace cuelearn::experiment
