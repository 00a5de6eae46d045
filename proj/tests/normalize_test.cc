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

#include <gtest/gtest.h>

#include <set>

#include "test_support.h"
#include "ultrasumm/corpus_io.h"
#include "ultrasumm/error.h"
#include "ultrasumm/stemmer.h"
#include "ultrasumm/utf8.h"

namespace ultrasumm {
namespace {

using testing::kFixtures;
using testing::kNewsExcerpt;
using testing::TempDir;
using testing::write_file;

std::string Join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& t : v) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

Document NewsDocument() {
  return preprocess(RawDocument{"news", kNewsExcerpt, "en"},
                    FilterOptions{1});
}

TEST(Fix, TruncatesToFirstLetters) {
  const auto fix1 = NormalizationStrategy::Fix(1);
  EXPECT_EQ(normalize_token("sings", fix1, "en"), "s");
  EXPECT_EQ(normalize_token("song", fix1, "en"), "s");
  EXPECT_EQ(normalize_token("smith", fix1, "en"), "s");
  EXPECT_EQ(normalize_token("clinton", fix1, "en"), "c");
  EXPECT_EQ(normalize_token("x", NormalizationStrategy::Fix(4), "en"), "x");
  EXPECT_EQ(normalize_token("été", fix1, "fr"), "é");
  EXPECT_EQ(normalize_token("ñandú", NormalizationStrategy::Fix(2), "es"),
            "ña");
}

TEST(Fix, RejectsOutOfRange) {
  EXPECT_THROW(NormalizationStrategy::Fix(0), ConfigError);
  EXPECT_THROW(NormalizationStrategy::Fix(kMaxFix + 1), ConfigError);
  EXPECT_NO_THROW(NormalizationStrategy::Fix(kMaxFix));
}

TEST(Fix, NewsExcerptRows) {
  const auto doc = NewsDocument();
  ASSERT_EQ(doc.sentences.size(), 3u);
  const auto fix1 = NormalizationStrategy::Fix(1);
  const std::vector<std::string> expected = {
      "f j m f p c c c c l d n s r f w h i m l",
      "c j d p j s h c s s r l",
      "c l e b l c t s l f d s r u c",
  };
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(Join(normalize_sentence(doc.sentences[i].tokens, fix1, "en")),
              expected[i])
        << "s" << i;
  }
}

TEST(Stem, NewsExcerptRows) {
  const auto doc = NewsDocument();
  const auto stem = NormalizationStrategy::Stem();
  // The second sentence agrees word for word with the published example.
  EXPECT_EQ(Join(normalize_sentence(doc.sentences[1].tokens, stem, "en")),
            "clinton januari deposit paula jone sexual harass case swore "
            "sexual relationship lewinski");
  // The other two are frozen from the reference Snowball implementation.
  EXPECT_EQ(Join(normalize_sentence(doc.sentences[0].tokens, stem, "en")),
            "feder judg monday found presid clinton civil contempt court lie "
            "deposit natur sexual relationship former white hous intern "
            "monica lewinski");
  EXPECT_EQ(Join(normalize_sentence(doc.sentences[2].tokens, stem, "en")),
            "clinton later explain believ lie case type sex lewinski fall "
            "definit sexual relat use case");
}

TEST(Stem, RelationsShareStemPrefix) {
  const auto& en = stemmer_for("en");
  const auto a = en.stem("relationship");
  const auto b = en.stem("relations");
  EXPECT_EQ(b, "relat");
  EXPECT_EQ(a.substr(0, 5), "relat");
}

class StemVectors : public ::testing::TestWithParam<std::string> {};

TEST_P(StemVectors, MatchReference) {
  const auto& lang = GetParam();
  const auto& stemmer = stemmer_for(lang);
  EXPECT_EQ(stemmer.language(), lang);
  const auto pairs =
      testing::read_pairs(testing::kTestData / ("stem_" + lang + ".tsv"));
  ASSERT_EQ(pairs.size(), 400u);
  std::size_t mismatches = 0;
  for (const auto& [word, stem] : pairs) {
    if (stemmer.stem(word) != stem) {
      ++mismatches;
      ADD_FAILURE() << lang << ": " << word << " -> " << stemmer.stem(word)
                    << " (expected " << stem << ")";
    }
  }
  EXPECT_EQ(mismatches, 0u);
}

INSTANTIATE_TEST_SUITE_P(Languages, StemVectors,
                         ::testing::Values("en", "es", "fr"));

TEST(Stem, KnownWords) {
  EXPECT_EQ(stemmer_for("es").stem("cantaban"), "cant");
  EXPECT_EQ(stemmer_for("fr").stem("continuellement"), "continuel");
  EXPECT_EQ(stemmer_for("en").stem("generously"), "generous");
  EXPECT_THROW(stemmer_for("xx"), ConfigError);
}

TEST(Raw, IsIdentity) {
  const std::vector<std::string> tokens = {"running", "dogs", "été"};
  EXPECT_EQ(normalize_sentence(tokens, NormalizationStrategy::Raw(), "fr"),
            tokens);
  EXPECT_TRUE(
      normalize_sentence({}, NormalizationStrategy::Fix(1), "en").empty());
}

TEST(Lemma, DictionaryLookupWithIdentityFallback) {
  auto dict = std::make_shared<LemmaDict>("en");
  dict->insert("Singing", "sing");
  dict->insert("went", "go");
  dict->insert("went", "went");  // later wins
  const auto lemma = NormalizationStrategy::Lemma(dict);
  EXPECT_EQ(normalize_token("singing", lemma, "en"), "sing");
  EXPECT_EQ(normalize_token("went", lemma, "en"), "went");
  EXPECT_EQ(normalize_token("unknown", lemma, "en"), "unknown");
  EXPECT_THROW(NormalizationStrategy::Lemma(nullptr), ConfigError);
  EXPECT_THROW(parse_strategy("lemma"), ConfigError);
}

TEST(Lemma, LoadDictionaryFiles) {
  TempDir dir;
  write_file(dir.path() / "one.tsv", "singing\tsing\n");
  const auto one = load_lemma_dict(dir.path() / "one.tsv", "en");
  EXPECT_EQ(one.size(), 1u);
  EXPECT_EQ(one.lookup("singing"), "sing");

  write_file(dir.path() / "empty.tsv", "");
  const auto empty = load_lemma_dict(dir.path() / "empty.tsv", "en");
  EXPECT_TRUE(empty.empty());
  EXPECT_EQ(empty.lookup("anything"), "anything");

  const auto fifty =
      load_lemma_dict(testing::kTestData / "lemmas50.tsv", "en");
  EXPECT_EQ(fifty.size(), 50u);

  write_file(dir.path() / "bad.tsv", "a\tb\nno tab here\n");
  try {
    load_lemma_dict(dir.path() / "bad.tsv", "en");
    FAIL() << "expected FormatError";
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find(":2"), std::string::npos) << e.what();
  }
  EXPECT_THROW(load_lemma_dict(dir.path() / "missing.tsv", "en"), IngestError);
}

TEST(Lemma, BundledDictionariesLoad) {
  for (const auto& lang : testing::kLanguages) {
    const auto dict = load_lemma_dict(testing::kLemmas / (lang + ".tsv"), lang);
    EXPECT_GT(dict.size(), 400u) << lang;
  }
  const auto en = load_lemma_dict(testing::kLemmas / "en.tsv", "en");
  EXPECT_EQ(en.lookup("trees"), "tree");
  EXPECT_EQ(en.lookup("took"), "take");
}

TEST(ParseStrategy, LabelsRoundTrip) {
  for (const std::string spec : {"raw", "stem", "fix:1", "fix:14"}) {
    EXPECT_EQ(parse_strategy(spec).label(), spec);
  }
  EXPECT_EQ(parse_strategy("fix:3").file_label(), "fix3");
  EXPECT_EQ(parse_strategy("fix:3").n, 3);
  EXPECT_THROW(parse_strategy("fix:0"), ConfigError);
  EXPECT_THROW(parse_strategy("fix:x"), ConfigError);
  EXPECT_THROW(parse_strategy("porter"), ConfigError);
}

// Properties over the vocabulary of every fixture corpus.
TEST(Properties, FixPrefixAndMonotoneVocabulary) {
  for (const auto& lang : testing::kLanguages) {
    std::set<std::string> raw_vocab;
    for (const auto& raw : load_corpus(kFixtures / lang, lang).documents) {
      for (const auto& s : preprocess(raw).sentences) {
        raw_vocab.insert(s.tokens.begin(), s.tokens.end());
      }
    }
    std::size_t previous = 0;
    for (int n = 1; n <= 20; ++n) {
      const auto fix = NormalizationStrategy::Fix(n);
      std::set<std::string> vocab;
      for (const auto& w : raw_vocab) {
        const auto t = normalize_token(w, fix, lang);
        EXPECT_LE(utf8::Length(t), static_cast<std::size_t>(n));
        EXPECT_EQ(w.compare(0, t.size(), t), 0) << w << " / " << t;
        for (int m = n; m <= n + 3; ++m) {
          EXPECT_EQ(normalize_token(t, NormalizationStrategy::Fix(m), lang), t);
        }
        vocab.insert(t);
      }
      EXPECT_LE(previous, vocab.size()) << lang << " n=" << n;
      EXPECT_LE(vocab.size(), raw_vocab.size());
      previous = vocab.size();
    }
    EXPECT_EQ(previous, raw_vocab.size()) << lang;
  }
}

TEST(Properties, TokenCountPreserved) {
  auto lemmas = std::make_shared<LemmaDict>(
      load_lemma_dict(testing::kLemmas / "fr.tsv", "fr"));
  const auto raw = load_corpus(kFixtures / "fr", "fr").documents.front();
  const auto doc = preprocess(raw);
  for (const auto& strategy :
       {NormalizationStrategy::Raw(), NormalizationStrategy::Stem(),
        NormalizationStrategy::Lemma(lemmas), NormalizationStrategy::Fix(2)}) {
    const auto out = normalize_document(doc, strategy);
    ASSERT_EQ(out.sentences.size(), doc.sentences.size());
    for (std::size_t i = 0; i < doc.sentences.size(); ++i) {
      EXPECT_EQ(out.sentences[i].tokens.size(), doc.sentences[i].tokens.size());
      EXPECT_EQ(out.sentences[i].surface, doc.sentences[i].surface);
    }
  }
}

}  // namespace
}  // namespace ultrasumm
