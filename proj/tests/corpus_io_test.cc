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

#include "ultrasumm/corpus_io.h"

#include <gtest/gtest.h>

#include <map>
#include <random>

#include "test_support.h"
#include "ultrasumm/error.h"
#include "ultrasumm/utf8.h"

namespace ultrasumm {
namespace {

using testing::kFixtures;
using testing::kNewsExcerpt;
using testing::TempDir;
using testing::write_file;

std::vector<std::string> Split(std::string_view text) {
  return split_sentences(text, builtin_abbreviations("en"));
}

TEST(LoadCorpus, EmptyDirectory) {
  TempDir dir;
  const auto load = load_corpus(dir.path(), "en");
  EXPECT_TRUE(load.documents.empty());
  EXPECT_TRUE(load.warnings.empty());
}

TEST(LoadCorpus, OrdersById) {
  TempDir dir;
  write_file(dir.path() / "b.txt", "Second.");
  write_file(dir.path() / "a.txt", "First.");
  const auto load = load_corpus(dir.path(), "en");
  ASSERT_EQ(load.documents.size(), 2u);
  EXPECT_EQ(load.documents[0].id, "a");
  EXPECT_EQ(load.documents[1].id, "b");
  EXPECT_EQ(load.documents[0].text, "First.");
  EXPECT_EQ(load.documents[0].language, "en");
}

TEST(LoadCorpus, FixtureDirectories) {
  for (const auto& lang : testing::kLanguages) {
    std::vector<std::string> expected;
    for (const auto& e : std::filesystem::directory_iterator(kFixtures / lang)) {
      expected.push_back(e.path().stem().string());
    }
    std::sort(expected.begin(), expected.end());
    const auto load = load_corpus(kFixtures / lang, lang);
    ASSERT_GE(load.documents.size(), 3u) << lang;
    std::vector<std::string> ids;
    for (const auto& d : load.documents) ids.push_back(d.id);
    EXPECT_EQ(ids, expected) << lang;
  }
}

TEST(LoadCorpus, MissingDirectoryNamesPath) {
  try {
    load_corpus("/nonexistent/ultrasumm-corpus", "en");
    FAIL() << "expected IngestError";
  } catch (const IngestError& e) {
    EXPECT_NE(std::string(e.what()).find("/nonexistent/ultrasumm-corpus"),
              std::string::npos);
  }
}

TEST(LoadCorpus, InvalidUtf8IsSkippedWithWarning) {
  TempDir dir;
  write_file(dir.path() / "good.txt", "Fine text.");
  write_file(dir.path() / "bad.txt", "Broken \xFF\xFE text.");
  const auto load = load_corpus(dir.path(), "en");
  ASSERT_EQ(load.documents.size(), 1u);
  EXPECT_EQ(load.documents[0].id, "good");
  ASSERT_EQ(load.warnings.size(), 1u);
  EXPECT_EQ(load.warnings[0].path.filename(), "bad.txt");
}

TEST(LoadCorpus, ClusterConcatenation) {
  TempDir dir;
  write_file(dir.path() / "c1" / "x.txt", "Alpha one.");
  write_file(dir.path() / "c1" / "y.txt", "Beta two.");
  write_file(dir.path() / "solo.txt", "Gamma.");
  const auto joined = load_corpus(dir.path(), "en", true);
  ASSERT_EQ(joined.documents.size(), 2u);
  EXPECT_EQ(joined.documents[0].id, "c1");
  EXPECT_EQ(joined.documents[0].text, "Alpha one.\nBeta two.");
  EXPECT_EQ(joined.documents[1].id, "solo");

  const auto separate = load_corpus(dir.path(), "en", false);
  ASSERT_EQ(separate.documents.size(), 3u);
  EXPECT_EQ(separate.documents[0].id, "c1__x");
  EXPECT_EQ(separate.documents[1].id, "c1__y");
}

TEST(SplitSentences, NewsExcerptThreeSentences) {
  const auto s = Split(kNewsExcerpt);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0].substr(0, 22), "A federal judge Monday");
  EXPECT_EQ(s[0].substr(s[0].size() - 19), "Monica S. Lewinsky.");
  EXPECT_EQ(s[1].substr(0, 23), "Clinton, in a January 1");
  EXPECT_EQ(s[2].substr(0, 21), "Clinton later explain");
}

TEST(SplitSentences, Degenerate) {
  EXPECT_TRUE(Split("").empty());
  EXPECT_TRUE(Split("   \n ").empty());
  EXPECT_EQ(Split("no terminator here"),
            std::vector<std::string>{"no terminator here"});
}

TEST(SplitSentences, TerminatorsAndClosers) {
  EXPECT_EQ(Split("Really? Yes! Fine."),
            (std::vector<std::string>{"Really?", "Yes!", "Fine."}));
  EXPECT_EQ(Split("He said \"stop.\" Then left."),
            (std::vector<std::string>{"He said \"stop.\"", "Then left."}));
  EXPECT_EQ(Split("Wait... what?!"),
            (std::vector<std::string>{"Wait...", "what?!"}));
}

TEST(SplitSentences, AbbreviationsAndInitials) {
  EXPECT_EQ(Split("Dr. Smith met J. K. Jones. They talked."),
            (std::vector<std::string>{"Dr. Smith met J. K. Jones.",
                                      "They talked."}));
  // Decimal points are not boundaries.
  EXPECT_EQ(Split("It cost 3.5 dollars. Cheap."),
            (std::vector<std::string>{"It cost 3.5 dollars.", "Cheap."}));
}

TEST(SplitSentences, ReconstructsTextUpToWhitespace) {
  const std::string text =
      "One  two.\nThree four!   Five? Six \"seven.\" Eight";
  std::string joined;
  for (const auto& s : Split(text)) joined += s + " ";
  auto squash = [](const std::string& t) {
    std::string out;
    for (char c : t) {
      if (c != ' ' && c != '\n') out.push_back(c);
    }
    return out;
  };
  EXPECT_EQ(squash(joined), squash(text));
}

TEST(Tokenize, StripsPunctuationDigitsAndCase) {
  EXPECT_EQ(tokenize("Clinton, in a January 1998 deposition."),
            (std::vector<std::string>{"clinton", "in", "a", "january",
                                      "deposition"}));
  EXPECT_EQ(tokenize("well-known l'école ¿Qué?"),
            (std::vector<std::string>{"well", "known", "l", "école", "qué"}));
  EXPECT_TRUE(tokenize("... 42 !").empty());
}

TEST(FilterSentence, NewsExcerptFirstSentence) {
  const auto surfaces = Split(kNewsExcerpt);
  const auto df = document_frequency(surfaces);
  const auto tokens = filter_sentence(surfaces[0], builtin_stoplist("en"), df,
                                      FilterOptions{1});
  const std::vector<std::string> head = {"federal", "judge",     "monday",
                                         "found",   "president", "clinton"};
  ASSERT_GE(tokens.size(), head.size());
  EXPECT_TRUE(std::equal(head.begin(), head.end(), tokens.begin()));
  for (const char* fw : {"a", "in", "of", "the", "his", "with"}) {
    EXPECT_EQ(std::count(tokens.begin(), tokens.end(), fw), 0) << fw;
  }
}

TEST(FilterSentence, StopWordsOnly) {
  const auto sw = builtin_stoplist("en");
  const std::string s = "The and of the.";
  EXPECT_TRUE(filter_sentence(s, sw, document_frequency({s})).empty());
}

TEST(FilterSentence, HapaxRemoved) {
  RawDocument raw{"d", "The zebra ran home. The horse ran home. Horses ran.",
                  "en"};
  const auto doc = preprocess(raw);
  for (const auto& s : doc.sentences) {
    for (const auto& t : s.tokens) EXPECT_NE(t, "zebra");
  }
  EXPECT_EQ(doc.sentences[0].tokens,
            (std::vector<std::string>{"ran", "home"}));
  EXPECT_EQ(doc.sentences[2].tokens, std::vector<std::string>{"ran"});
}

TEST(Preprocess, EmptySentencesKeepTheirIndex) {
  RawDocument raw{"d", "Apples fall. Unique words only here. Apples fall.",
                  "en"};
  const auto doc = preprocess(raw);
  ASSERT_EQ(doc.sentences.size(), 3u);
  EXPECT_TRUE(doc.sentences[1].tokens.empty());
  EXPECT_EQ(doc.sentences[1].surface, "Unique words only here.");
}

// Invariants over every fixture document.
TEST(Preprocess, FixtureInvariants) {
  for (const auto& lang : testing::kLanguages) {
    const auto stoplist = builtin_stoplist(lang);
    for (const auto& raw : load_corpus(kFixtures / lang, lang).documents) {
      const auto doc = preprocess(raw);
      const auto surfaces = split_sentences(raw);
      const auto df = document_frequency(surfaces);
      ASSERT_EQ(doc.sentences.size(), surfaces.size());
      ASSERT_GE(doc.sentences.size(), 40u) << raw.id;
      for (std::size_t i = 0; i < doc.sentences.size(); ++i) {
        const auto& s = doc.sentences[i];
        EXPECT_EQ(s.index, i);
        for (const auto& t : s.tokens) {
          EXPECT_FALSE(t.empty());
          EXPECT_FALSE(stoplist.contains(t)) << t;
          EXPECT_GE(df.at(t), 2u) << t;
          EXPECT_EQ(utf8::Lowercase(t), t);
          for (char32_t c : utf8::DecodeOrThrow(t)) {
            EXPECT_FALSE(utf8::IsPunctOrDigit(c));
          }
        }
        // Idempotence: filtering the kept tokens again drops nothing.
        std::string rejoined;
        for (const auto& t : s.tokens) rejoined += t + " ";
        EXPECT_EQ(filter_sentence(rejoined, stoplist, df), s.tokens);
      }
    }
  }
}

TEST(StopList, LoadsFileWithComments) {
  TempDir dir;
  write_file(dir.path() / "stop.txt", "# comment\nThe\n\n  and  \nÉTÉ\n");
  const auto sl = load_stoplist(dir.path() / "stop.txt", "fr");
  EXPECT_EQ(sl.size(), 3u);
  EXPECT_TRUE(sl.contains("the"));
  EXPECT_TRUE(sl.contains("and"));
  EXPECT_TRUE(sl.contains("été"));
  EXPECT_THROW(load_stoplist(dir.path() / "missing.txt", "fr"), IngestError);
}

TEST(StopList, BuiltinsAreLowercase) {
  for (const auto& lang : testing::kLanguages) {
    const auto sl = builtin_stoplist(lang);
    EXPECT_GT(sl.size(), 50u);
    for (const auto& w : sl.words()) EXPECT_EQ(utf8::Lowercase(w), w);
  }
  EXPECT_THROW(builtin_stoplist("de"), ConfigError);
}

}  // namespace
}  // namespace ultrasumm
