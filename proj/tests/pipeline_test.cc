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

#include "ultrasumm/pipeline.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nlohmann/json.hpp"
#include "test_support.h"
#include "ultrasumm/error.h"
#include "ultrasumm/utf8.h"

namespace ultrasumm {
namespace {

namespace fs = std::filesystem;
using testing::kFixtures;
using testing::read_file;
using testing::TempDir;
using testing::write_file;

RunConfig fixture_config(const std::string& lang, const fs::path& out) {
  RunConfig c;
  c.corpus_dir = kFixtures / lang;
  c.language = lang;
  c.output_dir = out;
  return c;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

class PerLanguage : public ::testing::TestWithParam<std::string> {};

TEST_P(PerLanguage, PreprocessDensityAndDumps) {
  TempDir tmp;
  auto cfg = fixture_config(GetParam(), tmp.path());
  const auto report = cmd_preprocess(cfg);
  ASSERT_TRUE(report.failures.empty());
  ASSERT_EQ(report.rows.size(), 3u * 4u);

  std::map<std::string, DensitySummary> by;
  for (const auto& s : report.table) by[s.strategy] = s;
  ASSERT_EQ(by.size(), 4u);
  EXPECT_DOUBLE_EQ(by["raw"].volume, 1.0);
  EXPECT_LT(by["fix:1"].volume, 0.15);
  EXPECT_GT(by["fix:1"].density, by["stem"].density);
  EXPECT_LT(by["stem"].volume, 1.0);

  for (const auto& row : report.rows) {
    auto label = row.strategy;
    if (label.starts_with("fix:")) label.erase(3, 1);
    const auto path = tmp.path() / "dumps" / (row.doc_id + "." + label + ".mtx");
    ASSERT_TRUE(fs::exists(path)) << path;
    std::ifstream in(path);
    const auto m = read_dump(in);
    const auto st = density(m);
    EXPECT_EQ(st.rows, row.stats.rows);
    EXPECT_EQ(st.cols, row.stats.cols);
    EXPECT_EQ(st.nonzeros, row.stats.nonzeros);
    EXPECT_GE(row.stats.rows, 40u);
  }

  const auto csv = lines_of(read_file(tmp.path() / "density.csv"));
  ASSERT_EQ(csv.size(), 1 + report.rows.size());
  EXPECT_EQ(csv[0], "doc_id,strategy,P,N,rho,nonzeros,density,volume");
  const auto summary = lines_of(read_file(tmp.path() / "density_summary.csv"));
  ASSERT_EQ(summary.size(), 5u);
  EXPECT_EQ(summary[0], "strategy,mean_P,mean_N,rho,density,volume");
}

TEST_P(PerLanguage, SweepSaturatesAtRaw) {
  TempDir tmp;
  auto cfg = fixture_config(GetParam(), tmp.path());
  const auto report = cmd_sweep(cfg);
  ASSERT_TRUE(report.failures.empty());
  EXPECT_EQ(report.rows.size(), 3u * 17u * 3u);
  EXPECT_EQ(report.means.size(), 17u * 3u);

  // Longest filtered token decides where Fix(n) meets Raw.
  const Toolkit tk(cfg);
  const auto corpus = tk.load();
  std::map<std::string, std::size_t> longest;
  for (const auto& raw : corpus.documents) {
    std::size_t m = 0;
    for (const auto& s : tk.filter(raw).sentences) {
      for (const auto& t : s.tokens) m = std::max(m, utf8::Length(t));
    }
    longest[raw.id] = m;
  }
  for (const auto& raw : corpus.documents) {
    for (int n = 1; n <= kSweepMaxFix; ++n) {
      if (static_cast<std::size_t>(n) < longest[raw.id]) continue;
      for (auto kind : all_summarizers()) {
        const auto s = to_string(kind);
        EXPECT_EQ(report.summaries.at(raw.id + "|" + s + "|fix:" +
                                      std::to_string(n)),
                  report.summaries.at(raw.id + "|" + s + "|raw"));
      }
    }
  }

  for (const auto& mean : report.means) {
    double f1 = 0, f2 = 0, f4 = 0;
    std::size_t count = 0;
    for (const auto& row : report.rows) {
      if (row.summarizer != mean.summarizer || row.norm != mean.norm) continue;
      f1 += row.fresa.fresa1;
      f2 += row.fresa.fresa2;
      f4 += row.fresa.fresa_su4;
      ++count;
    }
    ASSERT_EQ(count, mean.documents);
    EXPECT_NEAR(mean.fresa.fresa1, f1 / count, 1e-12);
    EXPECT_NEAR(mean.fresa.fresa2, f2 / count, 1e-12);
    EXPECT_NEAR(mean.fresa.fresa_su4, f4 / count, 1e-12);
    EXPECT_NEAR(mean.fresa.mean,
                (mean.fresa.fresa1 + mean.fresa.fresa2 + mean.fresa.fresa_su4) / 3,
                1e-12);
  }
  EXPECT_EQ(lines_of(read_file(tmp.path() / "sweep.csv")).size(),
            1 + report.rows.size());
  EXPECT_EQ(lines_of(read_file(tmp.path() / "sweep_means.csv")).size(),
            1 + report.means.size());
}

TEST_P(PerLanguage, StatsConsistent) {
  TempDir tmp;
  auto cfg = fixture_config(GetParam(), tmp.path());
  cfg.norm = "fix:1";
  const auto fix1 = cmd_stats(cfg);
  EXPECT_EQ(fix1.documents, 3u);
  ASSERT_EQ(fix1.lengths.histogram.size(), 1u);
  EXPECT_EQ(fix1.lengths.histogram.begin()->first, 1u);
  EXPECT_EQ(fix1.lengths.mode, 1u);

  cfg.norm = "raw";
  const auto raw = cmd_stats(cfg);
  std::size_t sum = 0;
  for (const auto& [letter, n] : raw.ranking.ranked) sum += n;
  EXPECT_EQ(sum, raw.ranking.types);
  for (std::size_t i = 1; i < raw.ranking.ranked.size(); ++i) {
    EXPECT_GE(raw.ranking.ranked[i - 1].second, raw.ranking.ranked[i].second);
  }
  double top = 0;
  for (const auto& [len, v] : raw.lengths.normalized()) top = std::max(top, v);
  EXPECT_DOUBLE_EQ(top, 1.0);
  const auto lengths = read_file(tmp.path() / "lengths.tsv");
  EXPECT_NE(lengths.find("# mean:"), std::string::npos);
  EXPECT_NE(lengths.find("# mode:"), std::string::npos);
  EXPECT_TRUE(fs::exists(tmp.path() / "letters.tsv"));
}

INSTANTIATE_TEST_SUITE_P(Fixtures, PerLanguage,
                         ::testing::ValuesIn(testing::kLanguages));

TEST(Pipeline, SummarizeWritesDeterministicOutputs) {
  TempDir a, b;
  auto cfg = fixture_config("en", a.path());
  cfg.norm = "fix:1";
  const auto first = cmd_summarize(cfg);
  cfg.output_dir = b.path();
  cfg.workers = 3;
  const auto second = cmd_summarize(cfg);
  ASSERT_TRUE(first.failures.empty());
  ASSERT_EQ(first.runs.size(), 3u);
  ASSERT_EQ(second.runs.size(), 3u);
  for (std::size_t i = 0; i < first.runs.size(); ++i) {
    const auto& r = first.runs[i];
    EXPECT_EQ(r.doc_id, second.runs[i].doc_id);
    EXPECT_EQ(r.summary.selected, second.runs[i].summary.selected);
    const auto stem = r.doc_id + ".cortex.fix1";
    for (const char* ext : {".txt", ".json"}) {
      const auto pa = a.path() / "summaries" / (stem + ext);
      const auto pb = b.path() / "summaries" / (stem + ext);
      ASSERT_TRUE(fs::exists(pa)) << pa;
      EXPECT_EQ(read_file(pa), read_file(pb));
    }
    const auto j = nlohmann::json::parse(
        read_file(a.path() / "summaries" / (stem + ".json")));
    EXPECT_EQ(j["doc_id"], r.doc_id);
    EXPECT_EQ(j["summarizer"], "cortex");
    EXPECT_EQ(j["norm"], "fix:1");
    EXPECT_EQ(j["selected"].get<std::vector<std::size_t>>(), r.summary.selected);
    EXPECT_FALSE(j["whole_document"].get<bool>());
    EXPECT_EQ(r.text + "\n",
              read_file(a.path() / "summaries" / (stem + ".txt")));
  }

  const auto timing = lines_of(read_file(a.path() / "timing.csv"));
  ASSERT_EQ(timing.size(), 4u);
  EXPECT_EQ(timing[0],
            "doc_id,summarizer,norm,t_filter,t_normalize,t_vectorize,"
            "t_summarize,total");
  for (const auto& r : first.runs) {
    const auto& t = r.timing;
    EXPECT_GE(t.t_filter, 0);
    EXPECT_GE(t.t_normalize, 0);
    EXPECT_GE(t.t_vectorize, 0);
    EXPECT_GE(t.t_summarize, 0);
    EXPECT_DOUBLE_EQ(t.total(),
                     t.t_filter + t.t_normalize + t.t_vectorize + t.t_summarize);
  }
}

TEST(Pipeline, PercentHundredIsWholeDocument) {
  TempDir tmp;
  auto cfg = fixture_config("fr", tmp.path());
  cfg.budget = parse_budget("percent:100");
  const auto report = cmd_summarize(cfg);
  ASSERT_TRUE(report.failures.empty());
  const Toolkit tk(cfg);
  const auto corpus = tk.load();
  for (std::size_t i = 0; i < report.runs.size(); ++i) {
    const auto doc = tk.filter(corpus.documents[i]);
    EXPECT_EQ(report.runs[i].summary.selected.size(), doc.sentences.size());
  }
}

TEST(Pipeline, EmptyCorpusIsIngestError) {
  TempDir tmp;
  fs::create_directories(tmp.path() / "corpus");
  RunConfig cfg;
  cfg.corpus_dir = tmp.path() / "corpus";
  cfg.output_dir = tmp.path() / "out";
  EXPECT_THROW(cmd_summarize(cfg), IngestError);
  cfg.corpus_dir = tmp.path() / "missing";
  EXPECT_THROW(cmd_preprocess(cfg), IngestError);
}

TEST(Pipeline, SingleDocumentMeansEqualDocument) {
  TempDir tmp;
  fs::create_directories(tmp.path() / "corpus");
  fs::copy_file(kFixtures / "en" / "village_bakery.txt",
                tmp.path() / "corpus" / "bakery.txt");
  RunConfig cfg;
  cfg.corpus_dir = tmp.path() / "corpus";
  cfg.output_dir = tmp.path() / "out";
  const auto report = cmd_preprocess(cfg);
  ASSERT_EQ(report.rows.size(), 4u);
  for (const auto& s : report.table) {
    const auto row = std::find_if(
        report.rows.begin(), report.rows.end(),
        [&](const DensityRow& r) { return r.strategy == s.strategy; });
    ASSERT_NE(row, report.rows.end());
    EXPECT_DOUBLE_EQ(s.mean_rows, static_cast<double>(row->stats.rows));
    EXPECT_DOUBLE_EQ(s.mean_cols, static_cast<double>(row->stats.cols));
    EXPECT_DOUBLE_EQ(s.density, row->stats.density);
    EXPECT_DOUBLE_EQ(s.volume, row->volume);
  }
}

TEST(Pipeline, MantelGridReproducible) {
  TempDir a, b;
  auto cfg = fixture_config("es", a.path());
  cfg.permutations = 199;
  cfg.workers = 2;
  const auto first = cmd_mantel(cfg);
  cfg.output_dir = b.path();
  cfg.workers = 1;
  const auto second = cmd_mantel(cfg);
  ASSERT_TRUE(first.failures.empty());
  const auto n = first.strategies.size();
  ASSERT_EQ(n, 4u);
  for (std::size_t i = 0; i < n; ++i) {
    EXPECT_DOUBLE_EQ(first.grid[i][i], 1.0);
    for (std::size_t j = 0; j < n; ++j) {
      EXPECT_DOUBLE_EQ(first.grid[i][j], first.grid[j][i]);
      EXPECT_GT(first.grid[i][j], 0.0);
    }
  }
  EXPECT_EQ(read_file(a.path() / "mantel.json"),
            read_file(b.path() / "mantel.json"));
  EXPECT_EQ(read_file(a.path() / "mantel_grid.tsv"),
            read_file(b.path() / "mantel_grid.tsv"));
  const auto j = nlohmann::json::parse(read_file(a.path() / "mantel.json"));
  EXPECT_EQ(j["seed"], kDefaultSeed);
  EXPECT_EQ(j["permutations"], 199);
}

TEST(Pipeline, EvaluateMatchesSweep) {
  TempDir tmp;
  auto cfg = fixture_config("en", tmp.path());
  cfg.norm = "stem";
  cfg.summarizer = SummarizerKind::kArtex;
  cmd_summarize(cfg);
  const auto eval = cmd_evaluate(cfg);
  ASSERT_TRUE(eval.failures.empty());
  ASSERT_EQ(eval.rows.size(), 3u);

  cfg.sweep_max_fix = 1;
  cfg.output_dir = tmp.path() / "sweep";
  const auto sweep = cmd_sweep(cfg);
  for (const auto& row : eval.rows) {
    EXPECT_EQ(row.summarizer, "artex");
    EXPECT_EQ(row.norm, "stem");
    const auto it = std::find_if(sweep.rows.begin(), sweep.rows.end(),
                                 [&](const SweepRow& s) {
                                   return s.doc_id == row.doc_id &&
                                          s.summarizer == "artex" &&
                                          s.norm == "stem";
                                 });
    ASSERT_NE(it, sweep.rows.end());
    EXPECT_NEAR(it->fresa.mean, row.fresa.mean, 1e-12);
  }
  const auto csv = lines_of(read_file(tmp.path() / "evaluation.csv"));
  ASSERT_EQ(csv.size(), 4u);
  EXPECT_EQ(csv[0], "doc_id,summarizer,norm,fresa1,fresa2,fresaSU4,mean");
}

TEST(Pipeline, EvaluateWithoutSummariesFails) {
  TempDir tmp;
  auto cfg = fixture_config("en", tmp.path());
  EXPECT_THROW(cmd_evaluate(cfg), IngestError);
}

}  // namespace
}  // namespace ultrasumm
