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

#ifndef ULTRASUMM_NORMALIZE_H_
#define ULTRASUMM_NORMALIZE_H_

// Pipeline stage 3: map tokens to a canonical form. Raw leaves tokens alone,
// Stem applies the language's suffix stripper, Lemma looks words up in a
// dictionary (identity when absent) and Fix(n) keeps the first n letters.

#include <cstddef>
#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ultrasumm/corpus_io.h"

namespace ultrasumm {

class Stemmer;

class LemmaDict {
 public:
  LemmaDict() = default;
  explicit LemmaDict(std::string language) : language_(std::move(language)) {}

  // Later insertions of the same surface form win.
  void insert(std::string_view surface, std::string_view lemma);

  // Lemma of `surface`, or `surface` itself when unknown.
  std::string_view lookup(std::string_view surface) const;

  const std::string& language() const { return language_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

 private:
  std::string language_;
  std::unordered_map<std::string, std::string> entries_;
};

// UTF-8, one `surface<TAB>lemma` pair per line. Blank lines are ignored.
// Throws FormatError (with the line number) for a line without a tab.
LemmaDict load_lemma_dict(const std::filesystem::path& path,
                          std::string language);

enum class NormKind { kRaw, kStem, kLemma, kFix };

inline constexpr int kMaxFix = 32;

struct NormalizationStrategy {
  NormKind kind = NormKind::kRaw;
  int n = 0;  // Fix only
  std::shared_ptr<const LemmaDict> lemmas;  // Lemma only

  static NormalizationStrategy Raw() { return {}; }
  static NormalizationStrategy Stem() { return {NormKind::kStem, 0, nullptr}; }
  static NormalizationStrategy Lemma(std::shared_ptr<const LemmaDict> dict);
  static NormalizationStrategy Fix(int n);

  // "raw", "stem", "lemma", "fix:<n>".
  std::string label() const;
  // Same without punctuation, for file names: "fix3".
  std::string file_label() const;
};

// Parses `raw|stem|lemma|fix:<n>`. Lemma needs `lemmas`; Fix needs
// 1 <= n <= 32. Throws ConfigError otherwise.
NormalizationStrategy parse_strategy(
    std::string_view spec, std::shared_ptr<const LemmaDict> lemmas = nullptr);

// Bound to one strategy and language; cheap to copy.
class Normalizer {
 public:
  Normalizer(NormalizationStrategy strategy, std::string_view language);

  std::string normalize_token(std::string_view token) const;
  std::vector<std::string> normalize_sentence(
      const std::vector<std::string>& tokens) const;
  // Copy of `doc` with every sentence's tokens normalized.
  Document normalize_document(const Document& doc) const;

  const NormalizationStrategy& strategy() const { return strategy_; }

 private:
  NormalizationStrategy strategy_;
  const Stemmer* stemmer_ = nullptr;
};

std::string normalize_token(std::string_view token,
                            const NormalizationStrategy& strategy,
                            std::string_view language);
std::vector<std::string> normalize_sentence(
    const std::vector<std::string>& tokens,
    const NormalizationStrategy& strategy, std::string_view language);
Document normalize_document(const Document& doc,
                            const NormalizationStrategy& strategy);

}  // namespace ultrasumm

#endif  // ULTRASUMM_NORMALIZE_H_
