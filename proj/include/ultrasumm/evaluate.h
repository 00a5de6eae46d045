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

#ifndef ULTRASUMM_EVALUATE_H_
#define ULTRASUMM_EVALUATE_H_

// Reference-free content evaluation. Source and summary are compared
// through n-gram distributions of stems (unigrams, bigrams and skip-bigrams
// with at most two intervening stems), using
//   D(T||S) = sum_{t in T} |log(C_t^T/|T| + 1) - log(C_t^S/|S| + 1)|
// and score = 1 / (1 + D).

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ultrasumm/corpus_io.h"

namespace ultrasumm {

class Stemmer;

enum class Grain { kUnigram, kBigram, kSU4 };

std::string to_string(Grain grain);

struct NgramProfile {
  Grain grain = Grain::kUnigram;
  // Unigram keys are stems; pair keys are "first second".
  std::map<std::string, std::size_t> counts;
  std::size_t total = 0;
};

// Pairs never cross sentence boundaries. SU4 counts ordered pairs with 0, 1
// or 2 stems between them (no unigrams).
NgramProfile profile(const std::vector<std::vector<std::string>>& sentences,
                     Grain grain);
NgramProfile profile(const Document& stemmed, Grain grain);

// Sum over source terms only; natural log. Throws DomainError when the
// source profile is empty or the grains differ.
double divergence(const NgramProfile& source, const NgramProfile& summary);

// 1 / (1 + D). Throws DomainError for negative or NaN D.
double fresa_score(double divergence);

struct FresaReport {
  double fresa1 = 0;
  double fresa2 = 0;
  double fresa_su4 = 0;
  double mean = 0;
  double d1 = 0;
  double d2 = 0;
  double d_su4 = 0;
};

// Both documents hold stems. Throws DomainError("empty source") when the
// source has no stems.
FresaReport evaluate_summary(const Document& source, const Document& summary);

// Drops stop words and stems the remaining tokens of an already split and
// tokenized document, then evaluates.
FresaReport evaluate_summary(const Document& source, const Document& summary,
                             const StopList& stoplist, const Stemmer& stemmer);

// Text -> sentences -> tokens without stop words -> stems. No frequency
// filter is applied.
Document prepare_for_evaluation(std::string_view text,
                                std::string_view language,
                                const StopList& stoplist,
                                const Abbreviations& abbreviations);

}  // namespace ultrasumm

#endif  // ULTRASUMM_EVALUATE_H_
