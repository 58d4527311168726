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

#include "cli.h"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <stdexcept>

#include "CLI11.hpp"
#include "cuelearn/corpus.h"
#include "cuelearn/dataio.h"
#include "cuelearn/error.h"
#include "cuelearn/evaluation.h"
#include "cuelearn/experiment.h"
#include "cuelearn/induction.h"
#include "cuelearn/synth.h"
#include "cuelearn/tree_io.h"
#include "json.hpp"

namespace cuelearn::cli {
namespace {

namespace fs = std::filesystem;

enum class Format { kTable, kStructured };

struct Options {
  // Inputs.
  std::string corpus_path;
  std::string names_path;
  std::string data_path;
  std::string mapping_path;
  std::string subset = "core2";
  std::string target = "occurrence";
  std::string out_path;
  std::string spec_path;
  std::vector<long long> counts;

  // Learning and evaluation.
  int k = 10;
  std::uint64_t seed = 0;
  bool no_grouping = false;
  double cf = 0.25;
  int min_branch = 2;
  bool no_gain_guard = false;
  bool stratify = true;
  bool fold_baseline = false;
  Format format = Format::kTable;
};

void add_learner_flags(CLI::App* command, Options& o) {
  command->add_flag("--no-grouping", o.no_grouping,
                    "One branch per discrete value");
  command->add_option("--cf", o.cf, "Pruning confidence level")
      ->capture_default_str();
  command->add_option("--min-branch", o.min_branch,
                      "Minimum training rows per branch")
      ->capture_default_str();
  command->add_flag("--no-gain-guard", o.no_gain_guard,
                    "Do not restrict tests to above-average gain");
}

void add_cv_flags(CLI::App* command, Options& o) {
  command->add_option("--k", o.k, "Number of folds")->capture_default_str();
  command->add_option("--seed", o.seed, "Fold assignment seed")
      ->capture_default_str();
  command->add_flag("--stratify,!--no-stratify", o.stratify,
                    "Balance classes across folds");
}

void add_format_flag(CLI::App* command, Options& o) {
  command
      ->add_option("--format", o.format, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"table", Format::kTable},
                                        {"structured", Format::kStructured}},
          CLI::ignore_case))
      ->option_text("table|structured");
}

void add_dataset_inputs(CLI::App* command, Options& o) {
  command->add_option("--corpus", o.corpus_path, "Corpus file (JSON lines)");
  command->add_option("--names", o.names_path, "Attribute declarations");
  command->add_option("--data", o.data_path, "Data rows");
  command->add_option("--subset", o.subset, "core1, core2 or implicit_core")
      ->capture_default_str();
  command->add_option("--target", o.target, "occurrence or placement")
      ->capture_default_str();
  command->add_option("--mapping", o.mapping_path,
                      "Informational relation table (JSON)");
}

induction::LearnerParams learner_params(const Options& o) {
  induction::LearnerParams params;
  params.grouping = !o.no_grouping;
  params.cf = o.cf;
  params.min_branch_instances = o.min_branch;
  params.gain_guard = !o.no_gain_guard;
  params.validate();
  return params;
}

evaluation::CvOptions cv_options(const Options& o) {
  return {o.k, o.seed, o.stratify};
}

corpus::Subset subset_of(const std::string& text) {
  auto subset = corpus::parse_subset(text);
  if (!subset) throw InputError("unknown subset '" + text + "'");
  return *subset;
}

corpus::Target target_of(const std::string& text) {
  auto target = corpus::parse_target(text);
  if (!target) throw InputError("unknown target '" + text + "'");
  return *target;
}

std::vector<corpus::RelationRecord> load_corpus(const Options& o) {
  const auto mapping = o.mapping_path.empty()
                           ? corpus::InfoRelationMap::identity()
                           : dataio::read_info_relation_map(o.mapping_path);
  return dataio::read_corpus(o.corpus_path, mapping);
}

// Prints violations and reports whether there were any.
bool report_violations(std::span<const corpus::RelationRecord> records,
                       std::ostream& stream) {
  const auto violations = corpus::validate_corpus(records);
  for (const auto& v : violations) stream << v.record_id << " " << v.rule << "\n";
  return !violations.empty();
}

// Either a names/data pair or a corpus subset; nullopt after printing
// violations.
std::optional<Dataset> load_dataset(const Options& o, std::ostream& err) {
  const bool from_corpus = !o.corpus_path.empty();
  const bool from_files = !o.names_path.empty() || !o.data_path.empty();
  if (from_corpus == from_files) {
    throw InputError("give either --corpus or both --names and --data");
  }
  if (from_files) {
    if (o.names_path.empty() || o.data_path.empty()) {
      throw InputError("--names and --data go together");
    }
    return dataio::read_names_data(o.names_path, o.data_path);
  }
  const auto records = load_corpus(o);
  if (report_violations(records, err)) return std::nullopt;
  const auto target = target_of(o.target);
  const auto partition = corpus::partition_by_subset(records);
  if (target == corpus::Target::kPlacement) {
    return corpus::to_learning_dataset(
        corpus::placement_subset(partition[corpus::Subset::kCore2]), target);
  }
  const auto subset = subset_of(o.subset);
  if (!corpus::is_core_contributor(subset)) {
    throw InputError("subset '" + o.subset + "' carries no features");
  }
  return corpus::to_learning_dataset(partition[subset], target);
}

int cmd_validate(const Options& o, std::ostream& out) {
  const auto records = load_corpus(o);
  return report_violations(records, out) ? kExitViolations : kExitOk;
}

int cmd_train(const Options& o, std::ostream& out, std::ostream& err) {
  const auto params = learner_params(o);
  const auto dataset = load_dataset(o, err);
  if (!dataset) return kExitViolations;
  const auto tree = induction::train(*dataset, params);
  const auto json = dataio::format_tree_json(tree);
  if (!o.out_path.empty()) dataio::write_text_file(o.out_path, json);
  if (o.format == Format::kStructured) {
    out << json;
    return kExitOk;
  }
  const auto estimate = induction::test_tree(tree, *dataset, params.cf);
  out << dataio::format_tree_text(tree);
  char line[160];
  std::snprintf(line, sizeof(line),
                "\n%d nodes, training error %.1f%%, estimated %.1f%%\n",
                induction::node_count(tree.root), estimate.error_percent(),
                estimate.predicted_percent());
  out << line;
  return kExitOk;
}

int cmd_xval(const Options& o, std::ostream& out, std::ostream& err) {
  const auto params = learner_params(o);
  const auto dataset = load_dataset(o, err);
  if (!dataset) return kExitViolations;
  const auto result =
      evaluation::cross_validate(*dataset, params, cv_options(o));
  if (o.format == Format::kStructured) {
    nlohmann::ordered_json doc;
    doc["rows"] = dataset->size();
    doc["k"] = o.k;
    doc["seed"] = o.seed;
    doc["baseline"] = evaluation::majority_baseline(*dataset);
    doc["fold_errors"] = result.fold_errors;
    doc["fold_estimated"] = result.fold_estimated;
    doc["fold_nodes"] = result.fold_nodes;
    doc["mean_error"] = result.mean_error;
    doc["halfwidth95"] = result.halfwidth95;
    doc["mean_estimated"] = result.mean_estimated;
    doc["estimated_halfwidth95"] = result.estimated_halfwidth95;
    doc["mean_nodes"] = result.mean_nodes;
    if (o.fold_baseline) {
      const auto base = evaluation::fold_baseline(*dataset, cv_options(o));
      doc["fold_baseline"] = {{"mean", base.mean},
                              {"halfwidth95", base.halfwidth}};
    }
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  out << experiment::format_interval(result.observed()) << "\n";
  char line[160];
  std::snprintf(line, sizeof(line), "estimated %s, %.1f nodes, baseline %.1f\n",
                experiment::format_interval(result.estimated()).c_str(),
                result.mean_nodes, evaluation::majority_baseline(*dataset));
  out << line;
  if (o.fold_baseline) {
    out << "fold baseline "
        << experiment::format_interval(
               evaluation::fold_baseline(*dataset, cv_options(o)))
        << "\n";
  }
  return kExitOk;
}

int cmd_experiment(const Options& o, std::ostream& out, std::ostream& err) {
  experiment::ExperimentPlan plan;
  plan.target = target_of(o.target);
  plan.subset = plan.target == corpus::Target::kPlacement
                    ? corpus::Subset::kCore2
                    : subset_of(o.subset);
  plan.cv = cv_options(o);
  plan.params = learner_params(o);
  const auto records = load_corpus(o);
  if (report_violations(records, err)) return kExitViolations;
  const auto report = experiment::run_experiment(records, plan);
  out << (o.format == Format::kStructured
              ? experiment::format_report_json(report)
              : experiment::format_report_table(report));
  return kExitOk;
}

int cmd_synth(const Options& o, std::ostream& out) {
  auto spec = o.spec_path.empty()
                  ? synth::default_spec()
                  : synth::parse_spec_json(dataio::read_text_file(o.spec_path));
  const auto records = synth::generate_corpus(spec);
  if (o.out_path.empty() || o.out_path == "-") {
    out << dataio::format_corpus(records);
  } else {
    dataio::write_corpus(records, o.out_path);
  }
  return kExitOk;
}

int cmd_chi2(const Options& o, std::ostream& out) {
  const auto& c = o.counts;
  if (std::any_of(c.begin(), c.end(), [](long long x) { return x < 0; })) {
    throw InputError("counts must be nonnegative");
  }
  evaluation::ChiSquare result;
  try {
    result = evaluation::chi_square_2x2(c[0], c[1], c[2], c[3]);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  char line[96];
  std::snprintf(line, sizeof(line), "%.3f df=%d %s\n", result.statistic,
                result.df, result.significant_at_001 ? "p<.001" : "ns");
  out << line;
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Decision-tree learning of discourse cue occurrence and "
               "placement",
               "cuelearn"};
  app.require_subcommand(1);
  Options o;

  auto* validate = app.add_subcommand("validate", "Check corpus constraints");
  validate->add_option("corpus", o.corpus_path, "Corpus file")->required();
  validate->add_option("--mapping", o.mapping_path,
                       "Informational relation table (JSON)");

  auto* train = app.add_subcommand("train", "Train and prune one tree");
  add_dataset_inputs(train, o);
  add_learner_flags(train, o);
  add_format_flag(train, o);
  train->add_option("-o,--out", o.out_path, "Write the tree as JSON");

  auto* xval = app.add_subcommand("xval", "Cross-validate the learner");
  add_dataset_inputs(xval, o);
  add_learner_flags(xval, o);
  add_cv_flags(xval, o);
  add_format_flag(xval, o);
  xval->add_flag("--fold-baseline", o.fold_baseline,
                 "Also report the majority-class error per fold");

  auto* exp = app.add_subcommand("experiment", "Run the full protocol");
  exp->add_option("corpus", o.corpus_path, "Corpus file")->required();
  exp->add_option("--target", o.target, "occurrence or placement")
      ->capture_default_str();
  exp->add_option("--subset", o.subset, "core1, core2 or implicit_core")
      ->capture_default_str();
  exp->add_option("--mapping", o.mapping_path,
                  "Informational relation table (JSON)");
  add_learner_flags(exp, o);
  add_cv_flags(exp, o);
  add_format_flag(exp, o);

  auto* syn = app.add_subcommand("synth", "Generate a synthetic corpus");
  syn->add_option("--spec", o.spec_path, "Generator spec (JSON)");
  syn->add_option("-o,--out", o.out_path, "Output corpus file ('-' = stdout)");

  auto* stats = app.add_subcommand("stats", "Statistics");
  stats->require_subcommand(1);
  auto* chi2 = stats->add_subcommand("chi2", "Chi-square test of a 2x2 table");
  chi2->add_option("counts", o.counts, "a b c d")->required()->expected(4);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInputError;
  }

  try {
    if (validate->parsed()) return cmd_validate(o, out);
    if (train->parsed()) return cmd_train(o, out, err);
    if (xval->parsed()) return cmd_xval(o, out, err);
    if (exp->parsed()) return cmd_experiment(o, out, err);
    if (syn->parsed()) return cmd_synth(o, out);
    if (chi2->parsed()) return cmd_chi2(o, out);
  } catch (const InfeasibleError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace cuelearn::cli
