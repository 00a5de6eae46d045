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

#ifndef ULTRASUMM_SUMMARIZE_H_
#define ULTRASUMM_SUMMARIZE_H_

// Pipeline stage 5: sentence scoring (Cortex, Enertex, Artex), greedy
// extraction to a length budget, and assembly in source order.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ultrasumm/corpus_io.h"
#include "ultrasumm/sym_matrix.h"
#include "ultrasumm/vsm.h"

namespace ultrasumm {

enum class SummarizerKind { kCortex, kEnertex, kArtex };

// "cortex", "enertex", "artex"; throws ConfigError otherwise.
SummarizerKind parse_summarizer(std::string_view name);
std::string to_string(SummarizerKind kind);
const std::vector<SummarizerKind>& all_summarizers();

// Artex: s_i . g * |s_i| / (P * N), with g the mean row (global topic) and
// |s_i| the number of tokens in sentence i.
std::vector<double> score_artex(const SentenceMatrix& m);

// Enertex: E = G * G with G = S * S^T; score_i = sum_j |E_ij|.
SymMatrix enertex_energy(const SentenceMatrix& m);
std::vector<double> score_enertex(const SentenceMatrix& m);

// Per-sentence Cortex metrics before normalization.
struct CortexMetrics {
  std::vector<double> frequency;    // tokens in the sentence
  std::vector<double> entropy;      // of the sentence's term distribution
  std::vector<double> interaction;  // off-diagonal row sum of G
};
CortexMetrics cortex_metrics(const SentenceMatrix& m);

// Each metric is min-max scaled to [0, 1] (constant metric -> 0.5), then
// the vote 0.5 + (k+ - k-) / (2 * metrics) is taken.
std::vector<double> score_cortex(const SentenceMatrix& m);

std::vector<double> score(SummarizerKind kind, const SentenceMatrix& m);

// Min-max scaling to [0, 1]; all-equal input maps to 0.5.
std::vector<double> minmax_normalize(const std::vector<double>& values);

struct Budget {
  enum class Unit { kWords, kSentences, kPercent };
  Unit unit = Unit::kSentences;
  double value = 1;

  // "words:<k>", "sentences:<k>", "percent:<p>".
  std::string label() const;
};

// Throws ConfigError for malformed specs or non-positive sizes.
Budget parse_budget(std::string_view spec);

struct SummaryScore {
  std::vector<double> scores;         // min-max normalized, one per sentence
  std::vector<std::size_t> selected;  // ascending
  Budget budget;
  bool whole_document = false;  // budget was larger than the document
};

// Number of whitespace-separated words in a surface sentence.
std::size_t word_count(std::string_view surface);

// Ranks sentences by descending score (lower index first on ties; sentences
// without tokens after all others) and takes them until the budget is met.
// A word budget may be overshot by the last sentence taken.
SummaryScore extract(const std::vector<double>& scores, const Document& doc,
                     const Budget& budget);

// Selected surfaces joined by single spaces.
std::string assemble(const SummaryScore& summary, const Document& doc);

}  // namespace ultrasumm

#endif  // ULTRASUMM_SUMMARIZE_H_
