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

#include "ultrasumm/vsm.h"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "ultrasumm/error.h"

namespace ultrasumm {

SentenceMatrix::SentenceMatrix(std::size_t rows,
                               std::vector<std::string> vocab,
                               std::vector<MatrixEntry> entries,
                               std::string strategy)
    : rows_(rows), vocab_(std::move(vocab)), strategy_(std::move(strategy)) {
  for (std::size_t j = 1; j < vocab_.size(); ++j) {
    if (!(vocab_[j - 1] < vocab_[j])) {
      throw DomainError("vocabulary must be sorted and unique");
    }
  }
  for (const auto& e : entries) {
    if (e.row >= rows_ || e.col >= vocab_.size()) {
      throw DomainError("matrix entry out of range");
    }
    if (e.count < 0) throw DomainError("negative count");
  }
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  row_start_.assign(rows_ + 1, 0);
  for (std::size_t k = 0; k < entries.size();) {
    const auto& e = entries[k];
    Count total = 0;
    std::size_t next = k;
    while (next < entries.size() && entries[next].row == e.row &&
           entries[next].col == e.col) {
      total += entries[next].count;
      ++next;
    }
    if (total > 0) {
      col_.push_back(e.col);
      values_.push_back(total);
      ++row_start_[e.row + 1];
    }
    k = next;
  }
  for (std::size_t i = 0; i < rows_; ++i) row_start_[i + 1] += row_start_[i];
}

std::span<const std::size_t> SentenceMatrix::row_cols(std::size_t i) const {
  return {col_.data() + row_start_[i], row_start_[i + 1] - row_start_[i]};
}

std::span<const Count> SentenceMatrix::row_counts(std::size_t i) const {
  return {values_.data() + row_start_[i], row_start_[i + 1] - row_start_[i]};
}

Count SentenceMatrix::at(std::size_t i, std::size_t j) const {
  const auto cols = row_cols(i);
  const auto it = std::lower_bound(cols.begin(), cols.end(), j);
  if (it == cols.end() || *it != j) return 0;
  return row_counts(i)[static_cast<std::size_t>(it - cols.begin())];
}

Count SentenceMatrix::row_sum(std::size_t i) const {
  Count s = 0;
  for (Count c : row_counts(i)) s += c;
  return s;
}

std::vector<Count> SentenceMatrix::col_sums() const {
  std::vector<Count> out(cols(), 0);
  for (std::size_t k = 0; k < col_.size(); ++k) out[col_[k]] += values_[k];
  return out;
}

std::vector<MatrixEntry> SentenceMatrix::entries() const {
  std::vector<MatrixEntry> out;
  out.reserve(values_.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = row_start_[i]; k < row_start_[i + 1]; ++k) {
      out.push_back({i, col_[k], values_[k]});
    }
  }
  return out;
}

std::vector<std::vector<Count>> SentenceMatrix::to_dense() const {
  std::vector<std::vector<Count>> out(rows_, std::vector<Count>(cols(), 0));
  for (const auto& e : entries()) out[e.row][e.col] = e.count;
  return out;
}

SentenceMatrix vectorize_tokens(const Document& normalized,
                                std::string strategy_label) {
  if (normalized.sentences.empty()) {
    throw DomainError("empty document" +
                      (normalized.id.empty() ? "" : " '" + normalized.id + "'"));
  }
  std::map<std::string, std::size_t> columns;
  for (const auto& s : normalized.sentences) {
    for (const auto& t : s.tokens) columns.emplace(t, 0);
  }
  std::vector<std::string> vocab;
  vocab.reserve(columns.size());
  for (auto& [term, col] : columns) {
    col = vocab.size();
    vocab.push_back(term);
  }
  std::vector<MatrixEntry> entries;
  for (std::size_t i = 0; i < normalized.sentences.size(); ++i) {
    for (const auto& t : normalized.sentences[i].tokens) {
      entries.push_back({i, columns.at(t), 1});
    }
  }
  return SentenceMatrix(normalized.sentences.size(), std::move(vocab),
                        std::move(entries), std::move(strategy_label));
}

SentenceMatrix vectorize(const Document& filtered,
                         const NormalizationStrategy& strategy) {
  return vectorize_tokens(normalize_document(filtered, strategy),
                          strategy.label());
}

MatrixStats density(const SentenceMatrix& m) {
  MatrixStats s;
  s.rows = m.rows();
  s.cols = m.cols();
  s.nonzeros = m.nonzeros();
  s.size = static_cast<double>(m.rows()) * static_cast<double>(m.cols());
  s.density = s.size > 0 ? static_cast<double>(s.nonzeros) / s.size : 0.0;
  return s;
}

double volume(const SentenceMatrix& m, const SentenceMatrix& raw_baseline) {
  const double base = static_cast<double>(raw_baseline.rows()) *
                      static_cast<double>(raw_baseline.cols());
  if (base == 0.0) throw DomainError("raw baseline matrix is empty");
  return static_cast<double>(m.rows()) * static_cast<double>(m.cols()) / base;
}

SymMatrix gram(const SentenceMatrix& m) {
  // Column-wise accumulation: each column contributes to every pair of rows
  // that use it.
  std::vector<std::vector<std::pair<std::size_t, Count>>> by_col(m.cols());
  for (const auto& e : m.entries()) by_col[e.col].push_back({e.row, e.count});
  std::vector<Count> acc(m.rows() * m.rows(), 0);
  for (const auto& col : by_col) {
    for (std::size_t a = 0; a < col.size(); ++a) {
      for (std::size_t b = 0; b <= a; ++b) {
        acc[col[a].first * m.rows() + col[b].first] +=
            col[a].second * col[b].second;
      }
    }
  }
  SymMatrix g(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      g.set(i, j, static_cast<double>(acc[i * m.rows() + j]));
    }
  }
  return g;
}

void write_dump(std::ostream& out, const SentenceMatrix& m) {
  out << m.rows() << ' ' << m.cols() << ' '
      << (m.strategy().empty() ? "-" : m.strategy()) << '\n';
  for (const auto& e : m.entries()) {
    out << e.row << ' ' << e.col << ' ' << e.count << '\n';
  }
  for (const auto& term : m.vocab()) out << term << '\n';
}

SentenceMatrix read_dump(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError("matrix dump: missing header");
  std::istringstream header(line);
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::string strategy;
  if (!(header >> rows >> cols >> strategy)) {
    throw FormatError("matrix dump: bad header '" + line + "'");
  }
  if (strategy == "-") strategy.clear();
  std::vector<MatrixEntry> entries;
  std::vector<std::string> vocab;
  std::size_t line_no = 1;
  // Entry lines have three integer fields; vocabulary lines have one term.
  while (std::getline(in, line)) {
    ++line_no;
    if (vocab.empty()) {
      std::istringstream fields(line);
      MatrixEntry e;
      std::string rest;
      if (fields >> e.row >> e.col >> e.count && !(fields >> rest)) {
        entries.push_back(e);
        continue;
      }
    }
    if (line.empty()) {
      throw FormatError("matrix dump: empty line " + std::to_string(line_no));
    }
    vocab.push_back(line);
  }
  if (vocab.size() != cols) {
    throw FormatError("matrix dump: expected " + std::to_string(cols) +
                      " terms, found " + std::to_string(vocab.size()));
  }
  return SentenceMatrix(rows, std::move(vocab), std::move(entries),
                        std::move(strategy));
}

}  // namespace ultrasumm
