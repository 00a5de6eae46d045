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

#ifndef ULTRASUMM_CORPUS_IO_H_
#define ULTRASUMM_CORPUS_IO_H_

// Corpus ingestion and the first two pipeline stages: rule-based sentence
// splitting, then token filtering (case folding, punctuation and digit
// stripping, stop-word removal, removal of words seen fewer than
// `min_frequency` times in the document).

#include <cstddef>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ultrasumm {

struct RawDocument {
  std::string id;  // file stem, unique within a corpus
  std::string text;
  std::string language;
};

struct Sentence {
  std::size_t index = 0;
  std::string surface;
  std::vector<std::string> tokens;
};

// Sentences are kept in source order and `sentences[i].index == i`. A
// sentence may have no tokens left after filtering; it is kept so that
// indices stay aligned across normalizations.
struct Document {
  std::string id;
  std::string language;
  std::vector<Sentence> sentences;

  std::size_t token_count() const;
};

class StopList {
 public:
  StopList() = default;
  StopList(std::string language, const std::vector<std::string>& words);

  bool contains(std::string_view word) const {
    return words_.find(std::string(word)) != words_.end();
  }
  const std::string& language() const { return language_; }
  std::size_t size() const { return words_.size(); }
  const std::set<std::string>& words() const { return words_; }

 private:
  std::string language_;
  std::set<std::string> words_;
};

// Lowercase words (without the trailing dot) after which a '.' does not end
// a sentence, e.g. "mr", "e.g".
using Abbreviations = std::set<std::string>;

using TokenCounts = std::unordered_map<std::string, std::size_t>;

struct FilterOptions {
  // Tokens whose document frequency is below this are dropped. The default
  // removes hapax legomena.
  std::size_t min_frequency = 2;
};

struct LoadWarning {
  std::filesystem::path path;
  std::string message;
};

struct CorpusLoad {
  std::vector<RawDocument> documents;
  std::vector<LoadWarning> warnings;
};

const std::vector<std::string>& supported_languages();
bool is_supported_language(std::string_view language);

StopList builtin_stoplist(std::string_view language);
Abbreviations builtin_abbreviations(std::string_view language);

// Reads a stop list: UTF-8, one word per line, '#' starts a comment line.
// Words are lowercased; duplicates collapse.
StopList load_stoplist(const std::filesystem::path& path,
                       std::string language);

// One document per regular file in `dir`, ordered by id. Subdirectories are
// clusters: with `concat_cluster` each becomes one document (its files
// concatenated in name order), otherwise each file becomes a document with
// id "<cluster>__<stem>". Non UTF-8 files are skipped with a warning.
// Throws IngestError if `dir` is not a readable directory.
CorpusLoad load_corpus(const std::filesystem::path& dir,
                       std::string_view language, bool concat_cluster = true);

// Splits at '.', '!' and '?' followed by whitespace or end of text. A single
// '.' after an uppercase initial ("S.") or a known abbreviation does not
// split. Closing quotes and brackets stay with the preceding sentence.
// Returned strings are trimmed and non-empty.
std::vector<std::string> split_sentences(std::string_view text,
                                         const Abbreviations& abbreviations);
std::vector<std::string> split_sentences(const RawDocument& doc);

// Lowercases and splits on whitespace, punctuation and digits.
std::vector<std::string> tokenize(std::string_view surface);

TokenCounts document_frequency(const std::vector<std::string>& surfaces);

// Tokens of `surface` that are not stop words and whose frequency in
// `doc_frequency` is at least `options.min_frequency`; order preserved.
std::vector<std::string> filter_sentence(std::string_view surface,
                                         const StopList& stoplist,
                                         const TokenCounts& doc_frequency,
                                         const FilterOptions& options = {});

// Split + filter.
Document preprocess(const RawDocument& raw, const StopList& stoplist,
                    const Abbreviations& abbreviations,
                    const FilterOptions& options = {});
// Uses the built-in stop list and abbreviations for `raw.language`.
Document preprocess(const RawDocument& raw, const FilterOptions& options = {});

}  // namespace ultrasumm

#endif  // ULTRASUMM_CORPUS_IO_H_
