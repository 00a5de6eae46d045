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

#include "ultrasumm/normalize.h"

#include <charconv>
#include <fstream>

#include "ultrasumm/error.h"
#include "ultrasumm/stemmer.h"
#include "ultrasumm/utf8.h"

namespace ultrasumm {

void LemmaDict::insert(std::string_view surface, std::string_view lemma) {
  entries_[utf8::Lowercase(surface)] = utf8::Lowercase(lemma);
}

std::string_view LemmaDict::lookup(std::string_view surface) const {
  auto it = entries_.find(std::string(surface));
  if (it == entries_.end()) return surface;
  return it->second;
}

LemmaDict load_lemma_dict(const std::filesystem::path& path,
                          std::string language) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IngestError("cannot read lemma dictionary " + path.string());
  LemmaDict dict(std::move(language));
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const auto where = path.string() + ":" + std::to_string(line_no);
    if (!utf8::IsValid(line)) throw FormatError(where + ": invalid UTF-8");
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw FormatError(where + ": expected surface<TAB>lemma");
    }
    std::string_view surface(line.data(), tab);
    std::string_view lemma(line.data() + tab + 1, line.size() - tab - 1);
    if (surface.empty() || lemma.empty()) {
      throw FormatError(where + ": empty field");
    }
    dict.insert(surface, lemma);
  }
  return dict;
}

NormalizationStrategy NormalizationStrategy::Lemma(
    std::shared_ptr<const LemmaDict> dict) {
  if (!dict) throw ConfigError("lemma normalization needs a dictionary");
  return {NormKind::kLemma, 0, std::move(dict)};
}

NormalizationStrategy NormalizationStrategy::Fix(int n) {
  if (n < 1 || n > kMaxFix) {
    throw ConfigError("fix length must be in 1.." + std::to_string(kMaxFix) +
                      ", got " + std::to_string(n));
  }
  return {NormKind::kFix, n, nullptr};
}

std::string NormalizationStrategy::label() const {
  switch (kind) {
    case NormKind::kRaw: return "raw";
    case NormKind::kStem: return "stem";
    case NormKind::kLemma: return "lemma";
    case NormKind::kFix: return "fix:" + std::to_string(n);
  }
  return "?";
}

std::string NormalizationStrategy::file_label() const {
  if (kind == NormKind::kFix) return "fix" + std::to_string(n);
  return label();
}

NormalizationStrategy parse_strategy(std::string_view spec,
                                     std::shared_ptr<const LemmaDict> lemmas) {
  if (spec == "raw") return NormalizationStrategy::Raw();
  if (spec == "stem") return NormalizationStrategy::Stem();
  if (spec == "lemma") return NormalizationStrategy::Lemma(std::move(lemmas));
  if (spec.starts_with("fix:")) {
    const auto digits = spec.substr(4);
    int n = 0;
    const auto [end, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec == std::errc() && end == digits.data() + digits.size() &&
        !digits.empty()) {
      return NormalizationStrategy::Fix(n);
    }
  }
  throw ConfigError("unknown normalization '" + std::string(spec) +
                    "' (expected raw, stem, lemma or fix:<n>)");
}

Normalizer::Normalizer(NormalizationStrategy strategy,
                       std::string_view language)
    : strategy_(std::move(strategy)) {
  switch (strategy_.kind) {
    case NormKind::kStem:
      stemmer_ = &stemmer_for(language);
      break;
    case NormKind::kLemma:
      if (!strategy_.lemmas) {
        throw ConfigError("lemma normalization needs a dictionary");
      }
      break;
    case NormKind::kFix:
      if (strategy_.n < 1 || strategy_.n > kMaxFix) {
        throw ConfigError("fix length out of range");
      }
      break;
    case NormKind::kRaw:
      break;
  }
}

std::string Normalizer::normalize_token(std::string_view token) const {
  switch (strategy_.kind) {
    case NormKind::kRaw:
      return std::string(token);
    case NormKind::kStem:
      return stemmer_->stem(token);
    case NormKind::kLemma:
      return std::string(strategy_.lemmas->lookup(token));
    case NormKind::kFix:
      return utf8::Prefix(token, static_cast<std::size_t>(strategy_.n));
  }
  return std::string(token);
}

std::vector<std::string> Normalizer::normalize_sentence(
    const std::vector<std::string>& tokens) const {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(normalize_token(t));
  return out;
}

Document Normalizer::normalize_document(const Document& doc) const {
  Document out = doc;
  for (auto& s : out.sentences) s.tokens = normalize_sentence(s.tokens);
  return out;
}

std::string normalize_token(std::string_view token,
                            const NormalizationStrategy& strategy,
                            std::string_view language) {
  return Normalizer(strategy, language).normalize_token(token);
}

std::vector<std::string> normalize_sentence(
    const std::vector<std::string>& tokens,
    const NormalizationStrategy& strategy, std::string_view language) {
  return Normalizer(strategy, language).normalize_sentence(tokens);
}

Document normalize_document(const Document& doc,
                            const NormalizationStrategy& strategy) {
  return Normalizer(strategy, doc.language).normalize_document(doc);
}

}  // namespace ultrasumm
