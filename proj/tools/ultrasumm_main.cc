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

// ultrasumm: command-line front end.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ultrasumm/error.h"
#include "ultrasumm/pipeline.h"

namespace {

using ultrasumm::DocumentFailure;
using ultrasumm::RunConfig;

int report_failures(const std::vector<DocumentFailure>& failures) {
  for (const auto& f : failures) {
    std::cerr << "error: " << f.doc_id << ": " << f.message << "\n";
  }
  return failures.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extractive summarization with ultra-stemming, stemming, "
               "lemmatization or raw text."};
  app.set_config("--config", "", "TOML-style config file; flags win over it");
  app.require_subcommand(1);
  app.fallthrough();

  std::string corpus;
  std::string lang = "en";
  std::string norm = "raw";
  std::string summarizer = "cortex";
  std::string budget;
  std::size_t perms = ultrasumm::kDefaultPermutations;
  std::uint64_t seed = ultrasumm::kDefaultSeed;
  std::string out = "ultrasumm-out";
  bool concat = true;
  std::size_t workers = 0;
  std::string lemma_dict;
  std::string stoplist;
  std::vector<std::string> strategies;
  int max_fix = ultrasumm::kSweepMaxFix;
  std::size_t min_frequency = 2;

  app.add_option("--corpus", corpus, "Corpus directory")->required();
  app.add_option("--lang", lang, "Language: en, es or fr")
      ->check(CLI::IsMember({"en", "es", "fr"}))
      ->capture_default_str();
  app.add_option("--norm", norm, "raw | stem | lemma | fix:<n>")
      ->capture_default_str();
  app.add_option("--summarizer", summarizer, "cortex | enertex | artex")
      ->check(CLI::IsMember({"cortex", "enertex", "artex"}))
      ->capture_default_str();
  app.add_option("--budget", budget,
                 "words:<k> | sentences:<k> | percent:<p> (default words:100 "
                 "for clusters, percent:10 otherwise)");
  app.add_option("--perms", perms, "Mantel permutations")
      ->check(CLI::Range(std::size_t{99}, std::size_t{10000000}))
      ->capture_default_str();
  app.add_option("--seed", seed, "Random seed")
      ->envname("ULTRASUMM_SEED")
      ->capture_default_str();
  app.add_option("--out", out, "Output directory")->capture_default_str();
  app.add_flag("--concat-cluster,!--no-concat-cluster", concat,
               "Treat each corpus subdirectory as one document")
      ->capture_default_str();
  app.add_option("--workers", workers, "Worker threads (0 = all cores)")
      ->capture_default_str();
  app.add_option("--lemma-dict", lemma_dict,
                 "surface<TAB>lemma dictionary (default: bundled)");
  app.add_option("--stoplist", stoplist, "Stop list file (default: built-in)");
  app.add_option("--strategies", strategies,
                 "Normalizations for preprocess and mantel, comma separated")
      ->delimiter(',');
  app.add_option("--max-fix", max_fix, "Largest n in the fix:<n> sweep")
      ->check(CLI::Range(1, ultrasumm::kMaxFix))
      ->capture_default_str();
  app.add_option("--min-frequency", min_frequency,
                 "Drop words seen fewer times in a document")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* preprocess = app.add_subcommand(
      "preprocess", "Matrix dumps and density / volume tables");
  auto* summarize = app.add_subcommand(
      "summarize", "Summaries, score records and stage timings");
  auto* sweep = app.add_subcommand(
      "sweep", "All summarizers over fix:1..n, raw, stem and lemma");
  auto* mantel = app.add_subcommand(
      "mantel", "Mantel tests between normalizations");
  auto* stats = app.add_subcommand(
      "stats", "First-letter ranking and word-length distribution");
  auto* evaluate = app.add_subcommand(
      "evaluate", "Score written summaries against their sources");

  CLI11_PARSE(app, argc, argv);

  try {
    RunConfig config;
    config.corpus_dir = corpus;
    config.language = lang;
    config.norm = norm;
    config.summarizer = ultrasumm::parse_summarizer(summarizer);
    if (!budget.empty()) config.budget = ultrasumm::parse_budget(budget);
    config.output_dir = out;
    config.seed = seed;
    config.permutations = perms;
    config.concat_cluster = concat;
    config.workers = workers;
    if (!lemma_dict.empty()) config.lemma_dict = lemma_dict;
    if (!stoplist.empty()) config.stoplist = stoplist;
    config.strategies = strategies;
    config.sweep_max_fix = max_fix;
    config.min_frequency = min_frequency;

    if (preprocess->parsed()) {
      const auto r = ultrasumm::cmd_preprocess(config);
      for (const auto& s : r.table) {
        std::cout << s.strategy << "\tP=" << s.mean_rows << "\tN="
                  << s.mean_cols << "\tdensity=" << s.density
                  << "\tvolume=" << s.volume << "\n";
      }
      return report_failures(r.failures);
    }
    if (summarize->parsed()) {
      const auto r = ultrasumm::cmd_summarize(config);
      for (const auto& run : r.runs) {
        std::cout << run.doc_id << "\t" << run.summary.selected.size() << "/"
                  << run.summary.scores.size() << " sentences"
                  << (run.summary.whole_document ? "\t(whole document)" : "")
                  << "\n";
      }
      return report_failures(r.failures);
    }
    if (sweep->parsed()) {
      const auto r = ultrasumm::cmd_sweep(config);
      for (const auto& m : r.means) {
        std::cout << m.summarizer << "\t" << m.norm << "\t" << m.fresa.mean
                  << "\n";
      }
      return report_failures(r.failures);
    }
    if (mantel->parsed()) {
      const auto r = ultrasumm::cmd_mantel(config);
      for (const auto& rec : r.records) {
        if (!rec.result) {
          std::cerr << "skipped: " << rec.doc_id << " " << rec.a << "/"
                    << rec.b << ": " << rec.skipped << "\n";
        }
      }
      for (std::size_t a = 0; a < r.strategies.size(); ++a) {
        for (std::size_t b = a + 1; b < r.strategies.size(); ++b) {
          std::cout << r.strategies[a] << "\t" << r.strategies[b] << "\tr="
                    << r.grid[a][b] << "\n";
        }
      }
      return report_failures(r.failures);
    }
    if (stats->parsed()) {
      const auto r = ultrasumm::cmd_stats(config);
      std::cout << "types=" << r.ranking.types
                << "\tmean_length=" << r.lengths.mean
                << "\tmode=" << r.lengths.mode << "\n";
      return 0;
    }
    if (evaluate->parsed()) {
      const auto r = ultrasumm::cmd_evaluate(config);
      for (const auto& row : r.rows) {
        std::cout << row.doc_id << "\t" << row.summarizer << "\t" << row.norm
                  << "\t" << row.fresa.mean << "\n";
      }
      return report_failures(r.failures);
    }
  } catch (const ultrasumm::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
