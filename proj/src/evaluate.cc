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

#include "ultrasumm/evaluate.h"

#include <cmath>

#include "ultrasumm/error.h"
#include "ultrasumm/stemmer.h"

namespace ultrasumm {
namespace {

constexpr std::size_t kMaxSkip = 2;

Document stem_document(const Document& doc, const StopList& stoplist,
                       const Stemmer& stemmer) {
  Document out;
  out.id = doc.id;
  out.language = doc.language;
  for (const auto& s : doc.sentences) {
    Sentence t;
    t.index = s.index;
    t.surface = s.surface;
    for (const auto& token : s.tokens) {
      if (!stoplist.contains(token)) t.tokens.push_back(stemmer.stem(token));
    }
    out.sentences.push_back(std::move(t));
  }
  return out;
}

}  // namespace

std::string to_string(Grain grain) {
  switch (grain) {
    case Grain::kUnigram: return "unigram";
    case Grain::kBigram: return "bigram";
    case Grain::kSU4: return "su4";
  }
  return "?";
}

NgramProfile profile(const std::vector<std::vector<std::string>>& sentences,
                     Grain grain) {
  NgramProfile p;
  p.grain = grain;
  const std::size_t reach = grain == Grain::kSU4 ? kMaxSkip + 1 : 1;
  for (const auto& stems : sentences) {
    if (grain == Grain::kUnigram) {
      for (const auto& s : stems) ++p.counts[s];
      p.total += stems.size();
      continue;
    }
    for (std::size_t i = 0; i < stems.size(); ++i) {
      for (std::size_t j = i + 1; j < stems.size() && j - i <= reach; ++j) {
        ++p.counts[stems[i] + ' ' + stems[j]];
        ++p.total;
      }
    }
  }
  return p;
}

NgramProfile profile(const Document& stemmed, Grain grain) {
  std::vector<std::vector<std::string>> sentences;
  sentences.reserve(stemmed.sentences.size());
  for (const auto& s : stemmed.sentences) sentences.push_back(s.tokens);
  return profile(sentences, grain);
}

double divergence(const NgramProfile& source, const NgramProfile& summary) {
  if (source.grain != summary.grain) {
    throw DomainError("profiles of different grains");
  }
  if (source.total == 0) throw DomainError("empty source profile");
  const double t_total = static_cast<double>(source.total);
  const double s_total = static_cast<double>(summary.total);
  double d = 0.0;
  for (const auto& [term, count] : source.counts) {
    double q = 0.0;
    if (summary.total > 0) {
      auto it = summary.counts.find(term);
      if (it != summary.counts.end()) {
        q = static_cast<double>(it->second) / s_total;
      }
    }
    d += std::abs(std::log1p(static_cast<double>(count) / t_total) -
                  std::log1p(q));
  }
  return d;
}

double fresa_score(double divergence) {
  if (!(divergence >= 0)) throw DomainError("divergence must be >= 0");
  return 1.0 / (1.0 + divergence);
}

FresaReport evaluate_summary(const Document& source, const Document& summary) {
  if (source.token_count() == 0) throw DomainError("empty source");
  FresaReport r;
  r.d1 = divergence(profile(source, Grain::kUnigram),
                    profile(summary, Grain::kUnigram));
  // A source whose sentences are all single stems has no pairs; its pair
  // grains then carry no information and score as a perfect match.
  auto pair_divergence = [&](Grain g) {
    const auto src = profile(source, g);
    return src.total == 0 ? 0.0 : divergence(src, profile(summary, g));
  };
  r.d2 = pair_divergence(Grain::kBigram);
  r.d_su4 = pair_divergence(Grain::kSU4);
  r.fresa1 = fresa_score(r.d1);
  r.fresa2 = fresa_score(r.d2);
  r.fresa_su4 = fresa_score(r.d_su4);
  r.mean = (r.fresa1 + r.fresa2 + r.fresa_su4) / 3.0;
  return r;
}

FresaReport evaluate_summary(const Document& source, const Document& summary,
                             const StopList& stoplist,
                             const Stemmer& stemmer) {
  return evaluate_summary(stem_document(source, stoplist, stemmer),
                          stem_document(summary, stoplist, stemmer));
}

Document prepare_for_evaluation(std::string_view text,
                                std::string_view language,
                                const StopList& stoplist,
                                const Abbreviations& abbreviations) {
  Document doc;
  doc.language = std::string(language);
  const auto surfaces = split_sentences(text, abbreviations);
  for (std::size_t i = 0; i < surfaces.size(); ++i) {
    doc.sentences.push_back({i, surfaces[i], tokenize(surfaces[i])});
  }
  return stem_document(doc, stoplist, stemmer_for(language));
}

}  // namespace ultrasumm
