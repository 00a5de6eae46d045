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

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "ultrasumm/error.h"
#include "ultrasumm/utf8.h"

namespace ultrasumm {
namespace {

bool IsTerminator(char32_t c) { return c == U'.' || c == U'!' || c == U'?'; }

bool IsCloser(char32_t c) {
  switch (c) {
    case U'"':
    case U'\'':
    case U')':
    case U']':
    case U'}':
    case 0xBB:    // »
    case 0x201D:  // ”
    case 0x2019:  // ’
    case 0x203A:  // ›
      return true;
    default:
      return false;
  }
}

bool IsOpener(char32_t c) {
  switch (c) {
    case U'"':
    case U'\'':
    case U'(':
    case U'[':
    case U'{':
    case 0xAB:    // «
    case 0xBF:    // ¿
    case 0xA1:    // ¡
    case 0x201C:  // “
    case 0x2018:  // ‘
    case 0x2039:  // ‹
      return true;
    default:
      return false;
  }
}

bool IsSeparator(char32_t c) {
  return c < 0x20 || c == 0x7F || utf8::IsWhitespace(c) ||
         utf8::IsPunctOrDigit(c);
}

// Trims and collapses internal whitespace runs to one space.
std::string NormalizeSpace(std::u32string_view text) {
  std::string out;
  bool pending_space = false;
  for (char32_t c : text) {
    if (utf8::IsWhitespace(c) || c == U'\n' || c == U'\r') {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    utf8::Append(out, c);
  }
  return out;
}

// Token immediately before position `end`, without leading opening quotes.
std::u32string_view PrecedingWord(std::u32string_view text, std::size_t begin,
                                  std::size_t end) {
  std::size_t k = end;
  while (k > begin && !utf8::IsWhitespace(text[k - 1])) --k;
  while (k < end && IsOpener(text[k])) ++k;
  return text.substr(k, end - k);
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IngestError("cannot read file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<std::filesystem::path> SortedEntries(
    const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> entries;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const auto name = entry.path().filename().string();
    if (name.empty() || name[0] == '.') continue;
    entries.push_back(entry.path());
  }
  std::sort(entries.begin(), entries.end());
  return entries;
}

}  // namespace

std::size_t Document::token_count() const {
  std::size_t n = 0;
  for (const auto& s : sentences) n += s.tokens.size();
  return n;
}

StopList::StopList(std::string language, const std::vector<std::string>& words)
    : language_(std::move(language)) {
  for (const auto& w : words) {
    if (!w.empty()) words_.insert(utf8::Lowercase(w));
  }
}

StopList load_stoplist(const std::filesystem::path& path,
                       std::string language) {
  std::ifstream in(path);
  if (!in) throw IngestError("cannot read stop list: " + path.string());
  std::vector<std::string> words;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t");
    std::string word = line.substr(first, last - first + 1);
    if (!utf8::IsValid(word)) {
      throw FormatError(path.string() + ":" + std::to_string(line_no) +
                        ": invalid UTF-8");
    }
    words.push_back(std::move(word));
  }
  return StopList(std::move(language), words);
}

CorpusLoad load_corpus(const std::filesystem::path& dir,
                       std::string_view language, bool concat_cluster) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    throw IngestError("corpus directory not found: " + dir.string());
  }
  CorpusLoad result;
  std::map<std::string, std::filesystem::path> seen;

  auto add = [&](std::string id, std::string text,
                 const std::filesystem::path& origin) {
    auto [it, inserted] = seen.emplace(id, origin);
    if (!inserted) {
      throw IngestError("duplicate document id '" + id + "': " +
                        it->second.string() + " and " + origin.string());
    }
    result.documents.push_back(
        RawDocument{std::move(id), std::move(text), std::string(language)});
  };
  auto read_checked = [&](const std::filesystem::path& file,
                          std::string* text) {
    *text = ReadFile(file);
    if (utf8::IsValid(*text)) return true;
    result.warnings.push_back({file, "not valid UTF-8; skipped"});
    return false;
  };

  for (const auto& entry : SortedEntries(dir)) {
    if (std::filesystem::is_regular_file(entry)) {
      std::string text;
      if (read_checked(entry, &text)) {
        add(entry.stem().string(), std::move(text), entry);
      }
    } else if (std::filesystem::is_directory(entry)) {
      const std::string cluster = entry.filename().string();
      std::string joined;
      bool any = false;
      for (const auto& file : SortedEntries(entry)) {
        if (!std::filesystem::is_regular_file(file)) continue;
        std::string text;
        if (!read_checked(file, &text)) continue;
        if (concat_cluster) {
          if (any) joined += "\n";
          joined += text;
          any = true;
        } else {
          add(cluster + "__" + file.stem().string(), std::move(text), file);
        }
      }
      if (concat_cluster && any) add(cluster, std::move(joined), entry);
    }
  }
  std::sort(result.documents.begin(), result.documents.end(),
            [](const RawDocument& a, const RawDocument& b) {
              return a.id < b.id;
            });
  return result;
}

std::vector<std::string> split_sentences(std::string_view text,
                                         const Abbreviations& abbreviations) {
  const std::u32string s = utf8::DecodeOrThrow(text);
  const std::u32string_view view(s);
  std::vector<std::string> out;
  auto emit = [&](std::size_t begin, std::size_t end) {
    std::string sentence = NormalizeSpace(view.substr(begin, end - begin));
    if (!sentence.empty()) out.push_back(std::move(sentence));
  };

  std::size_t start = 0;
  std::size_t i = 0;
  const std::size_t n = s.size();
  while (i < n) {
    if (!IsTerminator(s[i])) {
      ++i;
      continue;
    }
    std::size_t run_end = i;
    while (run_end < n && IsTerminator(s[run_end])) ++run_end;
    std::size_t j = run_end;
    while (j < n && IsCloser(s[j])) ++j;
    const bool at_boundary = j == n || utf8::IsWhitespace(s[j]);
    bool suppress = false;
    if (at_boundary && run_end - i == 1 && s[i] == U'.') {
      const auto word = PrecedingWord(view, start, i);
      if (word.size() == 1 && utf8::IsUpper(word[0])) {
        suppress = true;
      } else if (!word.empty()) {
        std::string lowered;
        for (char32_t c : word) utf8::Append(lowered, utf8::ToLower(c));
        suppress = abbreviations.count(lowered) > 0;
      }
    }
    if (at_boundary && !suppress) {
      emit(start, j);
      start = j;
    }
    i = j;
  }
  emit(start, n);
  return out;
}

std::vector<std::string> split_sentences(const RawDocument& doc) {
  return split_sentences(doc.text, builtin_abbreviations(doc.language));
}

std::vector<std::string> tokenize(std::string_view surface) {
  std::vector<std::string> tokens;
  std::string current;
  for (char32_t c : utf8::DecodeOrThrow(surface)) {
    if (IsSeparator(c)) {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
    } else {
      utf8::Append(current, utf8::ToLower(c));
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

TokenCounts document_frequency(const std::vector<std::string>& surfaces) {
  TokenCounts counts;
  for (const auto& surface : surfaces) {
    for (auto& token : tokenize(surface)) ++counts[std::move(token)];
  }
  return counts;
}

std::vector<std::string> filter_sentence(std::string_view surface,
                                         const StopList& stoplist,
                                         const TokenCounts& doc_frequency,
                                         const FilterOptions& options) {
  std::vector<std::string> kept;
  for (auto& token : tokenize(surface)) {
    if (stoplist.contains(token)) continue;
    const auto it = doc_frequency.find(token);
    const std::size_t f = it == doc_frequency.end() ? 0 : it->second;
    if (f < options.min_frequency) continue;
    kept.push_back(std::move(token));
  }
  return kept;
}

Document preprocess(const RawDocument& raw, const StopList& stoplist,
                    const Abbreviations& abbreviations,
                    const FilterOptions& options) {
  const auto surfaces = split_sentences(raw.text, abbreviations);
  const auto frequency = document_frequency(surfaces);
  Document doc{raw.id, raw.language, {}};
  doc.sentences.reserve(surfaces.size());
  for (std::size_t i = 0; i < surfaces.size(); ++i) {
    doc.sentences.push_back(
        Sentence{i, surfaces[i],
                 filter_sentence(surfaces[i], stoplist, frequency, options)});
  }
  return doc;
}

Document preprocess(const RawDocument& raw, const FilterOptions& options) {
  return preprocess(raw, builtin_stoplist(raw.language),
                    builtin_abbreviations(raw.language), options);
}

}  // namespace ultrasumm
