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
#include <set>

#include "cuelearn/error.h"
#include "cuelearn/synth.h"
#include "doctest.h"
#include "fixtures.h"

namespace cuelearn::experiment {
namespace {

using corpus::Subset;
using corpus::Target;

induction::TreeSummary summary_of(std::vector<std::string> names) {
  induction::TreeSummary s;
  s.node_count = 9;
  for (std::size_t i = 0; i < names.size(); ++i) {
    s.features.push_back({names[i], static_cast<int>(i)});
  }
  if (!names.empty()) s.root_attribute = names.front();
  return s;
}

CandidateTreeResult candidate(std::string name, double mean, double halfwidth,
                              int nodes, std::string root) {
  CandidateTreeResult c;
  c.features.name = name;
  c.features.attributes = {root};
  c.cv.mean_error = mean;
  c.cv.halfwidth95 = halfwidth;
  c.tree.node_count = nodes;
  c.tree.root_attribute = root;
  return c;
}

ExperimentPlan small_plan() {
  ExperimentPlan plan;
  plan.cv.k = 5;
  return plan;
}

TEST_CASE("enumerate_feature_sets") {
  const auto sets = enumerate_feature_sets(
      summary_of({"trib_pos", "inten_rel", "syn_rel", "above", "below"}));
  CHECK(sets.size() == 1 + 11 + 3);
  CHECK(sets.front().name == kAllFeaturesName);
  CHECK(sets.front().attributes.size() == 11);
  std::set<std::vector<std::string>> distinct;
  int nine = 0;
  for (const auto& set : sets) {
    CHECK(distinct.insert(set.attributes).second);
    for (const auto& name : set.attributes) {
      CHECK(std::find(corpus::kFeatureNames.begin(), corpus::kFeatureNames.end(),
                      name) != corpus::kFeatureNames.end());
    }
    nine += set.attributes.size() == 9;
    if (set.attributes.size() <= 4) {
      CHECK_FALSE(std::count(set.attributes.begin(), set.attributes.end(), "below"));
    }
  }
  CHECK(nine == 3);
  CHECK(enumerate_feature_sets(summary_of({"trib_pos", "above"})).size() == 5);
  CHECK_THROWS_AS(enumerate_feature_sets(summary_of({"trib_pos"})),
                  std::invalid_argument);
  CHECK(fixed_feature_sets().size() == 4);
}

TEST_CASE("select_best") {
  std::vector<CandidateTreeResult> one = {candidate("a", 30, 2, 5, "syn_rel")};
  CHECK(select_best(one) == 0);

  std::vector<CandidateTreeResult> rooted = {
      candidate("other", 27.0, 1.5, 15, "inten_rel"),
      candidate("trib", 27.8, 1.3, 18, "trib_pos")};
  CHECK(select_best(rooted) == 1);

  std::vector<CandidateTreeResult> dominant = {
      candidate("big", 40, 1, 3, "trib_pos"),
      candidate("best", 20, 1, 30, "syn_rel"),
      candidate("small", 35, 1, 1, "adjacency")};
  CHECK(select_best(dominant) == 1);

  std::vector<CandidateTreeResult> simplest = {
      candidate("x", 25, 3, 12, "syn_rel"), candidate("y", 26, 3, 7, "adjacency"),
      candidate("z", 24, 3, 7, "inten_rel")};
  CHECK(select_best(simplest) == 1);
  CHECK_THROWS_AS(select_best({}), std::invalid_argument);
}

TEST_CASE("planted occurrence rule is recovered") {
  const auto records = synth::generate_corpus(fixtures::planted_occurrence_spec(0.05, 1));
  const auto report = run_occurrence_experiment(records, Subset::kCore2, {});
  CHECK(report.rows == 155);
  CHECK(report.baseline == doctest::Approx(100.0 * 55 / 155));
  CHECK(report.best().cv.mean_error <= 10.0);
  const auto root = report.best().tree.root_attribute;
  CHECK((root == "trib_pos" || root == "inten_rel"));
  CHECK(report.best().tree.features.size() <= 6);
  CHECK(report.single_features.size() == 11);
  CHECK(std::find(report.best_features.begin(), report.best_features.end(),
                  "inten_rel") != report.best_features.end());
  CHECK(report.error_reduction.has_value());
}

TEST_CASE("uninformative corpus has no best features") {
  const auto records = synth::generate_corpus(synth::default_spec());
  const auto report =
      run_occurrence_experiment(records, Subset::kImplicitCore, small_plan());
  CHECK(report.best_features.empty());
  CHECK(format_report_table(report).find("Best features    none") !=
        std::string::npos);
}

TEST_CASE("placement follows a planted syntactic rule") {
  auto spec = synth::default_spec();
  synth::PlantedRule rule;
  rule.target = Target::kPlacement;
  rule.subsets = {Subset::kCore2};
  rule.cases = {{{{"syn_rel", {"trib_subordinate_to_core", "coordinated"}}},
                 "on_trib"}};
  rule.otherwise = "on_core";
  spec.rules.push_back(rule);
  const auto records = synth::generate_corpus(spec);
  const auto report = run_placement_experiment(records, {});
  CHECK(report.rows == 100);
  CHECK(report.baseline == doctest::Approx(43.0));
  CHECK(report.best().tree.root_attribute == "syn_rel");
  CHECK(report.best().cv.mean_error == 0.0);
  const bool has_pair = std::any_of(
      report.candidates.begin(), report.candidates.end(),
      [](const auto& c) { return c.features.name.rfind("pair:", 0) == 0; }) ||
      std::any_of(report.candidates.begin(), report.candidates.end(),
                  [](const auto& c) { return c.features.attributes.size() == 2; });
  CHECK(has_pair);
}

TEST_CASE("reports are deterministic and serialize losslessly") {
  const auto records = synth::generate_corpus(fixtures::planted_occurrence_spec(0.1, 3));
  auto plan = small_plan();
  plan.cv.seed = 42;
  const auto a = run_occurrence_experiment(records, Subset::kCore2, plan);
  const auto b = run_occurrence_experiment(records, Subset::kCore2, plan);
  CHECK(format_report_json(a) == format_report_json(b));
  CHECK(parse_report_json(format_report_json(a)) == a);
  CHECK_THROWS_AS(parse_report_json("{\"version\": 1}"), InputError);
  CHECK_THROWS_AS(parse_report_json("not json"), InputError);

  const auto table = format_report_table(a);
  for (const char* label : {"Baseline", "Best features", "Best tree"}) {
    CHECK(table.find(label) != std::string::npos);
  }
}

TEST_CASE("experiment input errors") {
  const auto records = synth::generate_corpus(synth::default_spec());
  CHECK_THROWS_AS(run_occurrence_experiment(records, Subset::kCluster, {}),
                  InputError);
  std::vector<corpus::RelationRecord> no_core1(records.begin(), records.end());
  std::erase_if(no_core1, [](const auto& r) { return r.subset == Subset::kCore1; });
  CHECK_THROWS_AS(run_occurrence_experiment(no_core1, Subset::kCore1, {}),
                  InputError);
  auto broken = records;
  broken.front().cue_position = corpus::CuePosition::kOnCore;
  broken.front().cued = true;
  CHECK_THROWS_AS(run_occurrence_experiment(broken, Subset::kCore1, {}),
                  InputError);
  ExperimentPlan bad;
  bad.feature_sets = {{"nothing", {}}};
  CHECK_THROWS_AS(run_occurrence_experiment(records, Subset::kCore2, bad),
                  InputError);
}

TEST_CASE("interval formatting") {
  CHECK(format_interval({25.6, 1.24}) == "25.6±1.2");
  CHECK(format_interval({0, 0}) == "0.0±0.0");
}

}  // namespace
}  // namespace cuelearn::experiment
