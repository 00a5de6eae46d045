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

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "ultrasumm/error.h"
#include "ultrasumm/stemmer.h"

#ifndef ULTRASUMM_DATA_DIR
#define ULTRASUMM_DATA_DIR "data"
#endif

namespace ultrasumm {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;
using Json = nlohmann::json;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

std::string secs(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9f", v);
  return buf;
}

// Writes through a temporary file so readers never see partial output.
void write_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IngestError("cannot write " + tmp.string());
    out << content;
    if (!out) throw IngestError("write failed: " + tmp.string());
  }
  fs::rename(tmp, path);
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IngestError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <typename Fn>
void parallel_for(std::size_t n, std::size_t workers, Fn&& fn) {
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(n, 1));
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (std::size_t i = next++; i < n; i = next++) fn(i);
  };
  if (workers == 1) {
    run();
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run);
  for (auto& t : pool) t.join();
}

// Runs fn, turning library and standard exceptions into a message.
template <typename Fn>
std::optional<std::string> guarded(Fn&& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    return std::string(e.what());
  }
  return std::nullopt;
}

std::string summary_stem(const std::string& id, const std::string& summarizer,
                         const NormalizationStrategy& s) {
  return id + "." + summarizer + "." + s.file_label();
}

std::string norm_from_file_label(const std::string& label) {
  if (label.starts_with("fix") && label.size() > 3) {
    return "fix:" + label.substr(3);
  }
  return label;
}

void collect_failures(const std::vector<std::optional<std::string>>& errors,
                      const std::vector<RawDocument>& docs,
                      std::vector<DocumentFailure>& out) {
  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (errors[i]) out.push_back({docs[i].id, *errors[i]});
  }
}

FresaReport mean_of(const std::vector<FresaReport>& reports) {
  FresaReport m;
  if (reports.empty()) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    return {nan, nan, nan, nan, nan, nan, nan};
  }
  for (const auto& r : reports) {
    m.fresa1 += r.fresa1;
    m.fresa2 += r.fresa2;
    m.fresa_su4 += r.fresa_su4;
    m.mean += r.mean;
    m.d1 += r.d1;
    m.d2 += r.d2;
    m.d_su4 += r.d_su4;
  }
  const double n = static_cast<double>(reports.size());
  m.fresa1 /= n;
  m.fresa2 /= n;
  m.fresa_su4 /= n;
  m.mean /= n;
  m.d1 /= n;
  m.d2 /= n;
  m.d_su4 /= n;
  return m;
}

std::string fresa_fields(const FresaReport& r) {
  return num(r.fresa1) + "," + num(r.fresa2) + "," + num(r.fresa_su4) + "," +
         num(r.mean);
}

}  // namespace

Budget default_budget(bool cluster_document) {
  Budget b;
  if (cluster_document) {
    b.unit = Budget::Unit::kWords;
    b.value = 100;
  } else {
    b.unit = Budget::Unit::kPercent;
    b.value = 10;
  }
  return b;
}

std::optional<fs::path> bundled_lemma_dict(std::string_view language) {
  std::vector<fs::path> roots;
  if (const char* env = std::getenv("ULTRASUMM_DATA_DIR")) roots.emplace_back(env);
  roots.emplace_back(ULTRASUMM_DATA_DIR);
  for (const auto& root : roots) {
    const auto path = root / "lemmas" / (std::string(language) + ".tsv");
    std::error_code ec;
    if (fs::is_regular_file(path, ec)) return path;
  }
  return std::nullopt;
}

Toolkit::Toolkit(RunConfig config) : config_(std::move(config)) {
  if (!is_supported_language(config_.language)) {
    throw ConfigError("unsupported language '" + config_.language + "'");
  }
  stoplist_ = config_.stoplist
                  ? load_stoplist(*config_.stoplist, config_.language)
                  : builtin_stoplist(config_.language);
  abbreviations_ = builtin_abbreviations(config_.language);
  auto dict_path = config_.lemma_dict;
  if (!dict_path) dict_path = bundled_lemma_dict(config_.language);
  if (dict_path) {
    lemmas_ = std::make_shared<const LemmaDict>(
        load_lemma_dict(*dict_path, config_.language));
  }
  if (config_.workers == 0) {
    config_.workers = std::max(1u, std::thread::hardware_concurrency());
  }
}

NormalizationStrategy Toolkit::strategy(std::string_view spec) const {
  if (spec == "lemma" && !lemmas_) {
    throw ConfigError("lemma normalization needs a dictionary (--lemma-dict)");
  }
  return parse_strategy(spec, lemmas_);
}

LoadedCorpus Toolkit::load() const {
  auto loaded =
      load_corpus(config_.corpus_dir, config_.language, config_.concat_cluster);
  if (loaded.documents.empty()) {
    throw IngestError("no documents in " + config_.corpus_dir.string());
  }
  LoadedCorpus out;
  for (auto& doc : loaded.documents) {
    std::error_code ec;
    out.cluster.push_back(config_.concat_cluster &&
                          fs::is_directory(config_.corpus_dir / doc.id, ec));
    out.documents.push_back(std::move(doc));
  }
  out.warnings = std::move(loaded.warnings);
  return out;
}

Document Toolkit::filter(const RawDocument& raw) const {
  FilterOptions options;
  options.min_frequency = config_.min_frequency;
  return preprocess(raw, stoplist_, abbreviations_, options);
}

Document Toolkit::evaluation_view(std::string_view text) const {
  return prepare_for_evaluation(text, config_.language, stoplist_,
                                abbreviations_);
}

Budget Toolkit::budget_for(bool cluster_document) const {
  return config_.budget ? *config_.budget : default_budget(cluster_document);
}

SummaryRun summarize_document(const Toolkit& toolkit, const RawDocument& raw,
                              const NormalizationStrategy& strategy,
                              SummarizerKind summarizer, const Budget& budget) {
  SummaryRun run;
  run.doc_id = raw.id;
  run.summarizer = to_string(summarizer);
  run.norm = strategy.label();
  run.timing.doc_id = raw.id;

  auto start = Clock::now();
  const Document filtered = toolkit.filter(raw);
  run.timing.t_filter = seconds_since(start);

  start = Clock::now();
  const Normalizer normalizer(strategy, raw.language);
  const Document normalized = normalizer.normalize_document(filtered);
  run.timing.t_normalize = seconds_since(start);

  start = Clock::now();
  const SentenceMatrix m = vectorize_tokens(normalized, strategy.label());
  run.timing.t_vectorize = seconds_since(start);

  start = Clock::now();
  run.summary = extract(score(summarizer, m), normalized, budget);
  run.text = assemble(run.summary, normalized);
  run.timing.t_summarize = seconds_since(start);
  return run;
}

SummarizeReport cmd_summarize(const RunConfig& config) {
  const Toolkit tk(config);
  const auto corpus = tk.load();
  const auto strategy = tk.strategy(config.norm);
  const auto& docs = corpus.documents;
  std::vector<std::optional<SummaryRun>> runs(docs.size());
  std::vector<std::optional<std::string>> errors(docs.size());
  const fs::path dir = config.output_dir / "summaries";
  parallel_for(docs.size(), tk.config().workers, [&](std::size_t i) {
    errors[i] = guarded([&] {
      auto run = summarize_document(tk, docs[i], strategy, config.summarizer,
                                    tk.budget_for(corpus.cluster[i]));
      const auto stem = summary_stem(run.doc_id, run.summarizer, strategy);
      Json j;
      j["doc_id"] = run.doc_id;
      j["summarizer"] = run.summarizer;
      j["norm"] = run.norm;
      j["budget"] = run.summary.budget.label();
      j["whole_document"] = run.summary.whole_document;
      j["sentences"] = run.summary.scores.size();
      j["scores"] = run.summary.scores;
      j["selected"] = run.summary.selected;
      write_file(dir / (stem + ".txt"), run.text + "\n");
      write_file(dir / (stem + ".json"), j.dump(2) + "\n");
      runs[i] = std::move(run);
    });
  });

  SummarizeReport report;
  collect_failures(errors, docs, report.failures);
  std::string csv =
      "doc_id,summarizer,norm,t_filter,t_normalize,t_vectorize,t_summarize,"
      "total\n";
  for (auto& run : runs) {
    if (!run) continue;
    const auto& t = run->timing;
    csv += t.doc_id + "," + run->summarizer + "," + run->norm + "," +
           secs(t.t_filter) + "," + secs(t.t_normalize) + "," +
           secs(t.t_vectorize) + "," + secs(t.t_summarize) + "," +
           secs(t.total()) + "\n";
    report.runs.push_back(std::move(*run));
  }
  write_file(config.output_dir / "timing.csv", csv);
  return report;
}

PreprocessReport cmd_preprocess(const RunConfig& config) {
  const Toolkit tk(config);
  const auto corpus = tk.load();
  std::vector<std::string> names = config.strategies;
  if (names.empty()) names = {"raw", "lemma", "stem", "fix:1"};
  if (std::find(names.begin(), names.end(), "raw") == names.end()) {
    names.insert(names.begin(), "raw");
  }
  std::vector<NormalizationStrategy> strategies;
  for (const auto& n : names) strategies.push_back(tk.strategy(n));

  const auto& docs = corpus.documents;
  std::vector<std::vector<DensityRow>> per_doc(docs.size());
  std::vector<std::optional<std::string>> errors(docs.size());
  const fs::path dumps = config.output_dir / "dumps";
  parallel_for(docs.size(), tk.config().workers, [&](std::size_t i) {
    errors[i] = guarded([&] {
      const Document filtered = tk.filter(docs[i]);
      std::vector<SentenceMatrix> mats;
      for (const auto& s : strategies) mats.push_back(vectorize(filtered, s));
      const auto raw_at = static_cast<std::size_t>(
          std::find(names.begin(), names.end(), "raw") - names.begin());
      std::vector<DensityRow> rows;
      for (std::size_t k = 0; k < mats.size(); ++k) {
        std::ostringstream dump;
        write_dump(dump, mats[k]);
        write_file(dumps / (docs[i].id + "." + strategies[k].file_label() +
                            ".mtx"),
                   dump.str());
        rows.push_back({docs[i].id, names[k], density(mats[k]),
                        volume(mats[k], mats[raw_at])});
      }
      per_doc[i] = std::move(rows);
    });
  });

  PreprocessReport report;
  collect_failures(errors, docs, report.failures);
  std::string csv = "doc_id,strategy,P,N,rho,nonzeros,density,volume\n";
  for (const auto& rows : per_doc) {
    for (const auto& r : rows) {
      csv += r.doc_id + "," + r.strategy + "," + std::to_string(r.stats.rows) +
             "," + std::to_string(r.stats.cols) + "," + num(r.stats.size) +
             "," + std::to_string(r.stats.nonzeros) + "," +
             num(r.stats.density) + "," + num(r.volume) + "\n";
      report.rows.push_back(r);
    }
  }
  for (std::size_t k = 0; k < names.size(); ++k) {
    DensitySummary s;
    s.strategy = names[k];
    std::size_t n = 0;
    for (const auto& rows : per_doc) {
      if (rows.empty()) continue;
      s.mean_rows += static_cast<double>(rows[k].stats.rows);
      s.mean_cols += static_cast<double>(rows[k].stats.cols);
      s.density += rows[k].stats.density;
      ++n;
    }
    if (n > 0) {
      s.mean_rows /= static_cast<double>(n);
      s.mean_cols /= static_cast<double>(n);
      s.density /= static_cast<double>(n);
    }
    s.size = s.mean_rows * s.mean_cols;
    report.table.push_back(s);
  }
  const auto raw_at = static_cast<std::size_t>(
      std::find(names.begin(), names.end(), "raw") - names.begin());
  const double raw_size = report.table[raw_at].size;
  std::string table = "strategy,mean_P,mean_N,rho,density,volume\n";
  for (auto& s : report.table) {
    s.volume = raw_size > 0 ? s.size / raw_size
                            : std::numeric_limits<double>::quiet_NaN();
    table += s.strategy + "," + num(s.mean_rows) + "," + num(s.mean_cols) +
             "," + num(s.size) + "," + num(s.density) + "," + num(s.volume) +
             "\n";
  }
  write_file(config.output_dir / "density.csv", csv);
  write_file(config.output_dir / "density_summary.csv", table);
  return report;
}

std::vector<std::string> sweep_norms(int max_fix) {
  std::vector<std::string> out;
  for (int n = 1; n <= max_fix; ++n) out.push_back("fix:" + std::to_string(n));
  out.insert(out.end(), {"raw", "stem", "lemma"});
  return out;
}

SweepReport cmd_sweep(const RunConfig& config) {
  const Toolkit tk(config);
  const auto corpus = tk.load();
  const auto names = sweep_norms(config.sweep_max_fix);
  std::vector<NormalizationStrategy> strategies;
  for (const auto& n : names) strategies.push_back(tk.strategy(n));
  const auto& summarizers = all_summarizers();

  const auto& docs = corpus.documents;
  struct DocResult {
    std::vector<SweepRow> rows;
    std::vector<std::pair<std::string, std::string>> summaries;
  };
  std::vector<DocResult> results(docs.size());
  std::vector<std::optional<std::string>> errors(docs.size());
  parallel_for(docs.size(), tk.config().workers, [&](std::size_t i) {
    errors[i] = guarded([&] {
      DocResult r;
      const Document filtered = tk.filter(docs[i]);
      const Document source = tk.evaluation_view(docs[i].text);
      const Budget budget = tk.budget_for(corpus.cluster[i]);
      std::vector<SentenceMatrix> mats;
      for (const auto& s : strategies) mats.push_back(vectorize(filtered, s));
      for (const auto kind : summarizers) {
        for (std::size_t k = 0; k < strategies.size(); ++k) {
          const auto summary = extract(score(kind, mats[k]), filtered, budget);
          const auto text = assemble(summary, filtered);
          const auto fresa =
              evaluate_summary(source, tk.evaluation_view(text));
          r.rows.push_back({docs[i].id, to_string(kind), names[k], fresa});
          r.summaries.emplace_back(
              docs[i].id + "|" + to_string(kind) + "|" + names[k], text);
        }
      }
      results[i] = std::move(r);
    });
  });

  SweepReport report;
  collect_failures(errors, docs, report.failures);
  std::string csv = "doc_id,summarizer,norm,fresa1,fresa2,fresaSU4,mean\n";
  for (auto& r : results) {
    for (auto& row : r.rows) {
      csv += row.doc_id + "," + row.summarizer + "," + row.norm + "," +
             fresa_fields(row.fresa) + "\n";
      report.rows.push_back(row);
    }
    for (auto& [key, text] : r.summaries) {
      report.summaries.emplace(key, std::move(text));
    }
  }
  std::string means =
      "summarizer,norm,fresa1,fresa2,fresaSU4,mean,documents\n";
  for (const auto kind : summarizers) {
    for (const auto& name : names) {
      std::vector<FresaReport> picked;
      for (const auto& row : report.rows) {
        if (row.summarizer == to_string(kind) && row.norm == name) {
          picked.push_back(row.fresa);
        }
      }
      SweepMean m{to_string(kind), name, mean_of(picked), picked.size()};
      means += m.summarizer + "," + m.norm + "," + fresa_fields(m.fresa) +
               "," + std::to_string(m.documents) + "\n";
      report.means.push_back(m);
    }
  }
  write_file(config.output_dir / "sweep.csv", csv);
  write_file(config.output_dir / "sweep_means.csv", means);
  return report;
}

MantelReport cmd_mantel(const RunConfig& config) {
  const Toolkit tk(config);
  const auto corpus = tk.load();
  MantelReport report;
  report.strategies = config.strategies;
  if (report.strategies.empty()) {
    report.strategies = {"lemma", "stem", "raw", "fix:1"};
  }
  std::vector<NormalizationStrategy> strategies;
  for (const auto& n : report.strategies) strategies.push_back(tk.strategy(n));
  const std::size_t k = strategies.size();

  const auto& docs = corpus.documents;
  std::vector<std::vector<MantelRecord>> per_doc(docs.size());
  std::vector<std::optional<std::string>> errors(docs.size());
  parallel_for(docs.size(), tk.config().workers, [&](std::size_t i) {
    errors[i] = guarded([&] {
      const Document filtered = tk.filter(docs[i]);
      std::vector<SymMatrix> grams;
      for (const auto& s : strategies) grams.push_back(gram(vectorize(filtered, s)));
      std::vector<MantelRecord> records;
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a + 1; b < k; ++b) {
          MantelRecord rec{docs[i].id, report.strategies[a],
                           report.strategies[b], std::nullopt, ""};
          try {
            rec.result = mantel_test(grams[a], grams[b], config.permutations,
                                     config.seed);
          } catch (const DomainError& e) {
            rec.skipped = e.what();
          }
          records.push_back(std::move(rec));
        }
      }
      per_doc[i] = std::move(records);
    });
  });
  collect_failures(errors, docs, report.failures);

  report.grid.assign(k, std::vector<double>(k, 0.0));
  Json records = Json::array();
  std::vector<std::vector<std::size_t>> used(k, std::vector<std::size_t>(k, 0));
  for (const auto& recs : per_doc) {
    for (const auto& rec : recs) {
      report.records.push_back(rec);
      Json j{{"doc_id", rec.doc_id}, {"a", rec.a}, {"b", rec.b}};
      if (rec.result) {
        const auto& r = *rec.result;
        j["r"] = r.r_observed;
        j["p_value"] = r.p_value;
        j["greater_or_equal"] = r.greater_or_equal;
        j["permutations"] = r.permutations;
        j["null_mean"] = r.null_mean;
        j["null_sd"] = r.null_sd;
        const auto a = static_cast<std::size_t>(
            std::find(report.strategies.begin(), report.strategies.end(),
                      rec.a) - report.strategies.begin());
        const auto b = static_cast<std::size_t>(
            std::find(report.strategies.begin(), report.strategies.end(),
                      rec.b) - report.strategies.begin());
        report.grid[a][b] += r.r_observed;
        ++used[a][b];
      } else {
        j["skipped"] = rec.skipped;
      }
      records.push_back(std::move(j));
    }
  }
  for (std::size_t a = 0; a < k; ++a) {
    report.grid[a][a] = 1.0;
    for (std::size_t b = a + 1; b < k; ++b) {
      report.grid[a][b] =
          used[a][b] ? report.grid[a][b] / static_cast<double>(used[a][b])
                     : std::numeric_limits<double>::quiet_NaN();
      report.grid[b][a] = report.grid[a][b];
    }
  }

  Json grid = Json::array();
  std::string tsv = "strategy";
  for (const auto& s : report.strategies) tsv += "\t" + s;
  tsv += "\n";
  for (std::size_t a = 0; a < k; ++a) {
    Json row = Json::array();
    tsv += report.strategies[a];
    for (std::size_t b = 0; b < k; ++b) {
      const double r = report.grid[a][b];
      row.push_back(std::isnan(r) ? Json(nullptr) : Json(r));
      tsv += "\t" + (a == b ? std::string("•") : num(r));
    }
    grid.push_back(std::move(row));
    tsv += "\n";
  }
  Json out{{"seed", config.seed},
           {"permutations", config.permutations},
           {"strategies", report.strategies},
           {"grid", grid},
           {"documents", records}};
  write_file(config.output_dir / "mantel.json", out.dump(2) + "\n");
  write_file(config.output_dir / "mantel_grid.tsv", tsv);
  return report;
}

StatsReport cmd_stats(const RunConfig& config) {
  const Toolkit tk(config);
  const auto corpus = tk.load();
  const auto strategy = tk.strategy(config.norm);
  const auto& docs = corpus.documents;
  std::vector<Document> normalized(docs.size());
  std::vector<std::optional<std::string>> errors(docs.size());
  parallel_for(docs.size(), tk.config().workers, [&](std::size_t i) {
    errors[i] = guarded([&] {
      normalized[i] = normalize_document(tk.filter(docs[i]), strategy);
    });
  });
  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (errors[i]) throw Error(docs[i].id + ": " + *errors[i]);
  }
  StatsReport report;
  report.documents = normalized.size();
  report.ranking = letter_ranking(normalized);
  report.lengths = word_length_distribution(normalized);

  const std::string header =
      "# corpus: " + config.corpus_dir.string() + "\n# language: " +
      config.language + "\n# filter: lowercase, punctuation and digits "
      "removed, stop words removed, min document frequency " +
      std::to_string(config.min_frequency) + "\n# norm: " + strategy.label() +
      "\n# documents: " + std::to_string(report.documents) + "\n";
  std::string letters = header + "# types: " +
                        std::to_string(report.ranking.types) +
                        "\nletter\ttypes\n";
  for (const auto& [letter, count] : report.ranking.ranked) {
    letters += letter + "\t" + std::to_string(count) + "\n";
  }
  std::string lengths = header + "# tokens: " +
                        std::to_string(report.lengths.tokens) + "\n# mean: " +
                        num(report.lengths.mean) + "\n# mode: " +
                        std::to_string(report.lengths.mode) +
                        "\nlength\tcount\tnormalized\n";
  const auto curve = report.lengths.normalized();
  for (const auto& [len, count] : report.lengths.histogram) {
    lengths += std::to_string(len) + "\t" + std::to_string(count) + "\t" +
               num(curve.at(len)) + "\n";
  }
  write_file(config.output_dir / "letters.tsv", letters);
  write_file(config.output_dir / "lengths.tsv", lengths);
  return report;
}

EvaluationReport cmd_evaluate(const RunConfig& config) {
  const Toolkit tk(config);
  const auto corpus = tk.load();
  std::map<std::string, const RawDocument*> by_id;
  for (const auto& d : corpus.documents) by_id[d.id] = &d;

  const fs::path dir = config.output_dir / "summaries";
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw IngestError("no summaries directory: " + dir.string());
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());

  std::vector<std::optional<EvaluationRow>> rows(files.size());
  std::vector<std::optional<std::string>> errors(files.size());
  parallel_for(files.size(), tk.config().workers, [&](std::size_t i) {
    errors[i] = guarded([&] {
      const std::string name = files[i].stem().string();
      const auto last = name.rfind('.');
      const auto mid =
          last == std::string::npos ? last : name.rfind('.', last - 1);
      if (last == std::string::npos || mid == std::string::npos) {
        throw FormatError("unexpected summary file name " + files[i].string());
      }
      EvaluationRow row;
      row.doc_id = name.substr(0, mid);
      row.summarizer = name.substr(mid + 1, last - mid - 1);
      row.norm = norm_from_file_label(name.substr(last + 1));
      auto it = by_id.find(row.doc_id);
      if (it == by_id.end()) {
        throw IngestError("no source document '" + row.doc_id + "'");
      }
      row.fresa = evaluate_summary(tk.evaluation_view(it->second->text),
                                   tk.evaluation_view(read_file(files[i])));
      rows[i] = std::move(row);
    });
  });

  EvaluationReport report;
  std::string csv = "doc_id,summarizer,norm,fresa1,fresa2,fresaSU4,mean\n";
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (errors[i]) {
      report.failures.push_back({files[i].filename().string(), *errors[i]});
      continue;
    }
    const auto& r = *rows[i];
    csv += r.doc_id + "," + r.summarizer + "," + r.norm + "," +
           fresa_fields(r.fresa) + "\n";
    report.rows.push_back(r);
  }
  write_file(config.output_dir / "evaluation.csv", csv);
  return report;
}

}  // namespace ultrasumm
