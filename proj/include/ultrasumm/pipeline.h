// Copyright 2026 The UltraSumm Authors.
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

#ifndef ULTRASUMM_PIPELINE_H_
#define ULTRASUMM_PIPELINE_H_

// Batch commands behind the command-line tool. Each command loads the
// corpus, processes documents concurrently and writes its reports under
// `RunConfig::output_dir`. Per-document failures are collected rather than
// aborting the batch.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ultrasumm/analyze.h"
#include "ultrasumm/corpus_io.h"
#include "ultrasumm/evaluate.h"
#include "ultrasumm/normalize.h"
#include "ultrasumm/summarize.h"
#include "ultrasumm/vsm.h"

namespace ultrasumm {

inline constexpr std::uint64_t kDefaultSeed = 42;
inline constexpr std::size_t kDefaultPermutations = 999;
inline constexpr int kSweepMaxFix = 14;

struct RunConfig {
  std::filesystem::path corpus_dir;
  std::string language = "en";
  std::string norm = "raw";
  SummarizerKind summarizer = SummarizerKind::kCortex;
  // Unset: words:100 for cluster documents, percent:10 otherwise.
  std::optional<Budget> budget;
  std::filesystem::path output_dir = "ultrasumm-out";
  std::uint64_t seed = kDefaultSeed;
  std::size_t permutations = kDefaultPermutations;
  bool concat_cluster = true;
  std::size_t workers = 1;
  std::optional<std::filesystem::path> lemma_dict;
  std::optional<std::filesystem::path> stoplist;
  // preprocess and mantel; empty means the command's default set.
  std::vector<std::string> strategies;
  int sweep_max_fix = kSweepMaxFix;
  // Minimum document frequency kept by the token filter.
  std::size_t min_frequency = 2;
};

// Budget used when none is configured.
Budget default_budget(bool cluster_document);

// Bundled lemma dictionary for a language, if one is installed.
std::optional<std::filesystem::path> bundled_lemma_dict(
    std::string_view language);

struct TimingRecord {
  std::string doc_id;
  double t_filter = 0;  // seconds
  double t_normalize = 0;
  double t_vectorize = 0;
  double t_summarize = 0;

  double total() const {
    return t_filter + t_normalize + t_vectorize + t_summarize;
  }
};

struct DocumentFailure {
  std::string doc_id;
  std::string message;
};

struct LoadedCorpus {
  std::vector<RawDocument> documents;
  std::vector<bool> cluster;  // parallel to documents
  std::vector<LoadWarning> warnings;
};

// Language resources and settings shared by every command.
class Toolkit {
 public:
  explicit Toolkit(RunConfig config);

  const RunConfig& config() const { return config_; }
  const StopList& stoplist() const { return stoplist_; }
  const Abbreviations& abbreviations() const { return abbreviations_; }
  std::shared_ptr<const LemmaDict> lemmas() const { return lemmas_; }

  NormalizationStrategy strategy(std::string_view spec) const;

  // Throws IngestError when the directory is missing or holds no document.
  LoadedCorpus load() const;
  Document filter(const RawDocument& raw) const;
  Document evaluation_view(std::string_view text) const;
  Budget budget_for(bool cluster_document) const;

 private:
  RunConfig config_;
  StopList stoplist_;
  Abbreviations abbreviations_;
  std::shared_ptr<const LemmaDict> lemmas_;
};

struct SummaryRun {
  std::string doc_id;
  std::string summarizer;
  std::string norm;
  SummaryScore summary;
  std::string text;
  TimingRecord timing;
};

// Filter, normalize, vectorize, score, extract and assemble one document,
// timing each stage.
SummaryRun summarize_document(const Toolkit& toolkit, const RawDocument& raw,
                              const NormalizationStrategy& strategy,
                              SummarizerKind summarizer, const Budget& budget);

struct SummarizeReport {
  std::vector<SummaryRun> runs;  // by doc id
  std::vector<DocumentFailure> failures;
};

// Writes summaries/<id>.<summarizer>.<norm>.txt and .json, and timing.csv.
SummarizeReport cmd_summarize(const RunConfig& config);

struct DensityRow {
  std::string doc_id;
  std::string strategy;
  MatrixStats stats;
  double volume = 0;
};

struct DensitySummary {
  std::string strategy;
  double mean_rows = 0;
  double mean_cols = 0;
  double size = 0;     // mean_rows * mean_cols
  double density = 0;  // mean of per-document densities
  double volume = 0;   // size / size of raw
};

struct PreprocessReport {
  std::vector<DensityRow> rows;
  std::vector<DensitySummary> table;
  std::vector<DocumentFailure> failures;
};

// Writes dumps/<id>.<norm>.mtx, density.csv (one row per document and
// strategy) and density_summary.csv. Raw is always computed as the volume
// baseline. Default strategies: raw, lemma, stem, fix:1.
PreprocessReport cmd_preprocess(const RunConfig& config);

// fix:1..max_fix followed by raw, stem and lemma.
std::vector<std::string> sweep_norms(int max_fix = kSweepMaxFix);

struct SweepRow {
  std::string doc_id;
  std::string summarizer;
  std::string norm;
  FresaReport fresa;
};

struct SweepMean {
  std::string summarizer;
  std::string norm;
  FresaReport fresa;  // component-wise mean over documents
  std::size_t documents = 0;
};

struct SweepReport {
  std::vector<SweepRow> rows;
  std::vector<SweepMean> means;
  // Keyed by "<doc>|<summarizer>|<norm>".
  std::map<std::string, std::string> summaries;
  std::vector<DocumentFailure> failures;
};

// Every summarizer under every sweep norm, evaluated against the source.
// Writes sweep.csv and sweep_means.csv.
SweepReport cmd_sweep(const RunConfig& config);

struct MantelRecord {
  std::string doc_id;
  std::string a;
  std::string b;
  std::optional<MantelResult> result;
  std::string skipped;  // reason when result is empty
};

struct MantelReport {
  std::vector<std::string> strategies;
  std::vector<MantelRecord> records;
  // Mean r over documents; diagonal is 1.
  std::vector<std::vector<double>> grid;
  std::vector<DocumentFailure> failures;
};

// Pairwise tests between strategies (default lemma, stem, raw, fix:1).
// Writes mantel.json and mantel_grid.tsv.
MantelReport cmd_mantel(const RunConfig& config);

struct StatsReport {
  LetterRanking ranking;
  LengthDistribution lengths;
  std::size_t documents = 0;
};

// Letter ranking and word lengths of the filtered corpus under the
// configured norm. Writes letters.tsv and lengths.tsv.
StatsReport cmd_stats(const RunConfig& config);

struct EvaluationRow {
  std::string doc_id;
  std::string summarizer;
  std::string norm;
  FresaReport fresa;
};

struct EvaluationReport {
  std::vector<EvaluationRow> rows;
  std::vector<DocumentFailure> failures;
};

// Scores every summaries/<id>.<summarizer>.<norm>.txt under the output
// directory against its source document. Writes evaluation.csv.
EvaluationReport cmd_evaluate(const RunConfig& config);

}  // namespace ultrasumm

#endif  // ULTRASUMM_PIPELINE_H_
