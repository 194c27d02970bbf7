// Copyright 2026 The Tempograph Authors.
//
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

#include "tempograph/cli.h"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tempograph/errors.h"
#include "tempograph/evaluation.h"
#include "tempograph/features.h"
#include "tempograph/graph.h"
#include "tempograph/league.h"
#include "tempograph/parallel.h"
#include "tempograph/relation.h"
#include "tempograph/temporal_filter.h"

namespace tempograph {

namespace {

struct Settings {
  std::string corpus_path;
  std::string out_path;
  std::string types;
  std::string time_source = "both";
  int64_t window = 4;
  std::string window_mode = "both";
  std::string measures = "all";
  int64_t min_count = 0;
  double recall_cap = 0.75;
  std::string denominator = "unfiltered";
  bool strict = false;
  int threads = 0;

  // build
  std::string dump_vectors;
  std::string dump_evidence;

  // eval / sweep
  std::string graph_path;
  std::string pairs_path;
  std::string subsets = "base,directional,all";
  std::string sources = "timex,docdate,both";
  std::string windows = "0,1,2,3,4,5,6,7,30,3650";

  // gen-corpus
  std::string config_path;
  std::string truth_prefix;
  int teams = -1;
  int matchdays = -1;
  int spacing = -1;
  int articles = -1;
  int lag = -1;
  double timex_prob = -1.0;
  int64_t seed = -1;

  // gen-dataset
  std::string clusters_path;
};

std::vector<std::string> SplitCommas(const std::string &s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

int64_t ParseWindowValue(const std::string &s) {
  char *end = nullptr;
  long long v = std::strtoll(s.c_str(), &end, 10);
  if (s.empty() || *end != '\0' || v < 0) {
    throw UsageError("window '" + s + "' is not a non-negative integer");
  }
  return v;
}

int ResolveThreads(int flag) {
  if (flag > 0) return flag;
  if (const char *env = std::getenv("TEMPOGRAPH_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return EffectiveThreads(0);
}

// Opens `path` for writing, or returns `fallback` for "" and "-".
class Output {
 public:
  Output(const std::string &path, std::ostream &fallback) : stream_(&fallback) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw DataError("cannot write '" + path + "'");
      stream_ = file_.get();
    }
  }
  std::ostream &get() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream *stream_;
};

LoadResult Load(const Settings &s, std::ostream &err) {
  LoadOptions opts;
  if (!s.types.empty()) opts.type_filter = s.types;
  opts.strict = s.strict;
  LoadResult r = LoadCorpusFile(s.corpus_path, opts);
  for (const auto &w : r.warnings) err << "warning: " << w << '\n';
  return r;
}

void CheckCommon(const Settings &s) {
  if (s.window < 0) throw UsageError("--window must be >= 0");
  if (s.min_count < 0) throw UsageError("--min-count must be >= 0");
  if (!(s.recall_cap > 0.0 && s.recall_cap <= 1.0)) {
    throw UsageError("--recall-cap must be in (0, 1]");
  }
  ParseTimeSource(s.time_source);
  ParseWindowMode(s.window_mode);
  ParseDenominator(s.denominator);
  ParseMeasureList(s.measures);
}

void RunGenCorpus(const Settings &s, std::ostream &out) {
  LeagueConfig config;
  if (!s.config_path.empty()) config = LoadLeagueConfigFile(s.config_path);
  if (s.teams >= 0) config.num_teams = s.teams;
  if (s.matchdays >= 0) config.num_matchdays = s.matchdays;
  if (s.spacing >= 0) config.matchday_spacing = s.spacing;
  if (s.articles >= 0) config.articles_per_match = s.articles;
  if (s.lag >= 0) config.report_lag_max = s.lag;
  if (s.timex_prob >= 0.0) config.timex_probability = s.timex_prob;
  if (s.seed >= 0) config.seed = static_cast<uint64_t>(s.seed);
  SyntheticCorpus synth = GenerateLeague(config);

  Output corpus_out(s.out_path, out);
  WriteRecords(corpus_out.get(), synth.instances);
  if (!s.truth_prefix.empty()) {
    Output matches(s.truth_prefix + ".matches.tsv", out);
    WriteMatches(matches.get(), synth.truth);
    Output pairs(s.truth_prefix + ".pairs.tsv", out);
    WritePairs(pairs.get(), synth.truth.pairs);
    Output clusters(s.truth_prefix + ".clusters.tsv", out);
    WriteClusters(clusters.get(), config.lexicon);
  }
}

void RunBuild(const Settings &s, std::ostream &out, std::ostream &err) {
  CheckCommon(s);
  LoadResult loaded = Load(s, err);
  const Corpus &corpus = loaded.corpus;
  GraphOptions options;
  options.source = ParseTimeSource(s.time_source);
  options.window = Window{s.window, ParseWindowMode(s.window_mode)};
  options.measures = ParseMeasureList(s.measures);
  options.denominator = ParseDenominator(s.denominator);
  options.min_count = s.min_count;
  options.threads = ResolveThreads(s.threads);
  EntailmentGraph graph = BuildGraph(corpus, options);
  Output graph_out(s.out_path, out);
  WriteGraph(graph_out.get(), graph);

  if (!s.dump_vectors.empty()) {
    Output o(s.dump_vectors, out);
    DumpVectors(o.get(), corpus, BuildVectors(corpus));
  }
  if (!s.dump_evidence.empty()) {
    FilterOptions f{options.source, options.window, options.threads,
                    ActivePredicates(corpus, options.min_count)};
    Output o(s.dump_evidence, out);
    DumpEvidence(o.get(), corpus, TemporalFilter(corpus, f));
  }
}

std::vector<EvalSubset> ParseSubsets(const std::string &list) {
  std::vector<EvalSubset> out;
  for (const auto &name : SplitCommas(list)) out.push_back(ParseSubset(name));
  if (out.empty()) throw UsageError("no subsets given");
  return out;
}

void RunEval(const Settings &s, std::ostream &out) {
  if (!(s.recall_cap > 0.0 && s.recall_cap <= 1.0)) {
    throw UsageError("--recall-cap must be in (0, 1]");
  }
  auto subsets = ParseSubsets(s.subsets);
  EntailmentGraph graph = ReadGraphFile(s.graph_path);
  auto pairs = LoadPairsFile(s.pairs_path);
  auto rows = EvaluateGraph(graph, pairs, subsets, s.recall_cap);
  Output o(s.out_path, out);
  WriteResultsCsv(o.get(), rows);
}

void RunSweep(const Settings &s, std::ostream &out, std::ostream &err) {
  CheckCommon(s);
  ExperimentGrid grid;
  grid.sources.clear();
  for (const auto &name : SplitCommas(s.sources)) grid.sources.push_back(ParseTimeSource(name));
  grid.windows.clear();
  for (const auto &w : SplitCommas(s.windows)) grid.windows.push_back(ParseWindowValue(w));
  if (grid.sources.empty() || grid.windows.empty()) {
    throw UsageError("--sources and --windows must be non-empty");
  }
  grid.measures = ParseMeasureList(s.measures);
  grid.subsets = ParseSubsets(s.subsets);
  grid.window_mode = ParseWindowMode(s.window_mode);
  grid.denominator = ParseDenominator(s.denominator);
  grid.recall_cap = s.recall_cap;
  grid.min_count = s.min_count;
  grid.threads = ResolveThreads(s.threads);

  LoadResult loaded = Load(s, err);
  auto pairs = LoadPairsFile(s.pairs_path);
  auto rows = RunExperiment(loaded.corpus, pairs, grid);
  Output o(s.out_path, out);
  WriteResultsCsv(o.get(), rows);
}

void RunGenDataset(const Settings &s, std::ostream &out) {
  auto clusters = LoadClustersFile(s.clusters_path);
  auto pairs = GeneratePairs(clusters);
  Output o(s.out_path, out);
  WritePairs(o.get(), pairs);
}

void RunStats(const Settings &s, std::ostream &out, std::ostream &err) {
  LoadResult loaded = Load(s, err);
  CorpusStats st = ComputeStats(loaded.corpus);
  out << "instances\t" << st.num_instances << '\n'
      << "predicates\t" << st.num_predicates << '\n'
      << "entity_pairs\t" << st.num_pairs << '\n'
      << "timexed\t" << st.num_timexed << '\n'
      << "timex_coverage\t" << st.timex_coverage << '\n'
      << "skipped_lines\t" << loaded.warnings.size() << '\n'
      << "filtered_out\t" << loaded.filtered_out << '\n';
}

void AddGraphFlags(CLI::App *cmd, Settings &s) {
  cmd->add_option("--time-source", s.time_source, "Time source: timex, docdate or both")
      ->capture_default_str();
  cmd->add_option("--window", s.window, "Temporal window N in days")->capture_default_str();
  cmd->add_option("--window-mode", s.window_mode,
                  "Extend both intervals (both) or only one (single) by N")
      ->capture_default_str();
  cmd->add_option("--measures", s.measures, "Comma-separated measure ids, or 'all'")
      ->capture_default_str();
  cmd->add_option("--min-count", s.min_count, "Drop predicates with fewer events")
      ->capture_default_str();
  cmd->add_option("--temporal-denominator", s.denominator,
                  "Denominators of temporal measures: unfiltered or filtered")
      ->capture_default_str();
  cmd->add_option("--types", s.types, "Keep only records of this type pair, e.g. "
                                      "organization#organization");
  cmd->add_option("--threads", s.threads,
                  "Worker threads (default: $TEMPOGRAPH_THREADS or all cores)");
  cmd->add_flag("--strict", s.strict, "Fail on malformed corpus lines");
}

}  // namespace

int RunCli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  Settings s;
  CLI::App app{"tempograph: temporally filtered entailment graphs"};
  app.require_subcommand(1);

  auto *gen = app.add_subcommand("gen-corpus", "Generate a synthetic league corpus");
  gen->add_option("--config", s.config_path, "League config (JSON)");
  gen->add_option("--out", s.out_path, "Corpus output (JSON lines)")->required();
  gen->add_option("--truth-prefix", s.truth_prefix,
                  "Write PREFIX.matches.tsv, PREFIX.pairs.tsv, PREFIX.clusters.tsv");
  gen->add_option("--teams", s.teams, "Number of teams");
  gen->add_option("--matchdays", s.matchdays, "Number of matchdays");
  gen->add_option("--spacing", s.spacing, "Days between matchdays");
  gen->add_option("--articles", s.articles, "Articles per match");
  gen->add_option("--lag", s.lag, "Maximum reporting lag in days");
  gen->add_option("--timex-prob", s.timex_prob, "Probability of a time expression");
  gen->add_option("--seed", s.seed, "Random seed");

  auto *build = app.add_subcommand("build", "Build an entailment graph from a corpus");
  build->add_option("--corpus", s.corpus_path, "Relation corpus (JSON lines)")->required();
  build->add_option("--out", s.out_path, "Graph output file")->required();
  build->add_option("--dump-vectors", s.dump_vectors, "Also write the feature vectors");
  build->add_option("--dump-evidence", s.dump_evidence, "Also write filtered counts");
  AddGraphFlags(build, s);

  auto *eval = app.add_subcommand("eval", "Score a graph against an entailment dataset");
  eval->add_option("--graph", s.graph_path, "Graph file (optionally gzipped)")->required();
  eval->add_option("--pairs", s.pairs_path, "Dataset: premise, hypothesis, label, category")
      ->required();
  eval->add_option("--out", s.out_path, "Results CSV (default stdout)");
  eval->add_option("--subsets", s.subsets, "Comma-separated: base, directional, all")
      ->capture_default_str();
  eval->add_option("--recall-cap", s.recall_cap, "Recall cap for AUC")->capture_default_str();

  auto *sweep = app.add_subcommand("sweep", "Evaluate a grid of sources and windows");
  sweep->add_option("--corpus", s.corpus_path, "Relation corpus (JSON lines)")->required();
  sweep->add_option("--pairs", s.pairs_path, "Entailment dataset")->required();
  sweep->add_option("--out", s.out_path, "Results CSV (default stdout)");
  sweep->add_option("--sources", s.sources, "Comma-separated time sources")
      ->capture_default_str();
  sweep->add_option("--windows", s.windows, "Comma-separated windows in days")
      ->capture_default_str();
  sweep->add_option("--subsets", s.subsets, "Comma-separated: base, directional, all")
      ->capture_default_str();
  sweep->add_option("--recall-cap", s.recall_cap, "Recall cap for AUC")->capture_default_str();
  AddGraphFlags(sweep, s);

  auto *gends = app.add_subcommand("gen-dataset", "Expand paraphrase clusters into pairs");
  gends->add_option("--clusters", s.clusters_path, "class, predicate, specificity")
      ->required();
  gends->add_option("--out", s.out_path, "Pairs output (default stdout)");

  auto *stats = app.add_subcommand("stats", "Print corpus statistics");
  stats->add_option("--corpus", s.corpus_path, "Relation corpus (JSON lines)")->required();
  stats->add_option("--types", s.types, "Keep only records of this type pair");
  stats->add_flag("--strict", s.strict, "Fail on malformed corpus lines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp &e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return 1;
  }

  try {
    if (gen->parsed()) RunGenCorpus(s, out);
    if (build->parsed()) RunBuild(s, out, err);
    if (eval->parsed()) RunEval(s, out);
    if (sweep->parsed()) RunSweep(s, out, err);
    if (gends->parsed()) RunGenDataset(s, out);
    if (stats->parsed()) RunStats(s, out, err);
  } catch (const UsageError &e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const DataError &e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace tempograph
