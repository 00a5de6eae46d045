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

#ifndef ULTRASUMM_VSM_H_
#define ULTRASUMM_VSM_H_

// Pipeline stage 4: the sentence-by-term occurrence matrix S (P x N), its
// density and volume, and the sentence Gram matrix S * S^T.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ultrasumm/corpus_io.h"
#include "ultrasumm/normalize.h"
#include "ultrasumm/sym_matrix.h"

namespace ultrasumm {

using Count = std::int64_t;

struct MatrixEntry {
  std::size_t row = 0;
  std::size_t col = 0;
  Count count = 0;

  bool operator==(const MatrixEntry&) const = default;
};

// Sparse, row-compressed. Columns are the sorted vocabulary; only positive
// counts are stored.
class SentenceMatrix {
 public:
  SentenceMatrix() = default;
  // `entries` may come in any order; duplicates are summed, zeros dropped.
  // Throws DomainError for out-of-range indices, negative counts or an
  // unsorted / duplicated vocabulary.
  SentenceMatrix(std::size_t rows, std::vector<std::string> vocab,
                 std::vector<MatrixEntry> entries, std::string strategy = "");

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return vocab_.size(); }
  std::size_t nonzeros() const { return values_.size(); }
  const std::vector<std::string>& vocab() const { return vocab_; }
  const std::string& strategy() const { return strategy_; }

  // Column indices and counts of row i.
  std::span<const std::size_t> row_cols(std::size_t i) const;
  std::span<const Count> row_counts(std::size_t i) const;

  Count at(std::size_t i, std::size_t j) const;
  Count row_sum(std::size_t i) const;
  std::vector<Count> col_sums() const;
  std::vector<MatrixEntry> entries() const;
  std::vector<std::vector<Count>> to_dense() const;

  bool operator==(const SentenceMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::vector<std::string> vocab_;
  std::vector<std::size_t> row_start_{0};
  std::vector<std::size_t> col_;
  std::vector<Count> values_;
  std::string strategy_;
};

// Builds S from tokens that are already normalized. Throws DomainError for a
// document with no sentences.
SentenceMatrix vectorize_tokens(const Document& normalized,
                                std::string strategy_label);
// Normalizes the filtered document, then vectorizes.
SentenceMatrix vectorize(const Document& filtered,
                         const NormalizationStrategy& strategy);

struct MatrixStats {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t nonzeros = 0;
  double size = 0.0;     // rho = P * N
  double density = 0.0;  // nonzeros / rho, 0 when rho == 0
};

MatrixStats density(const SentenceMatrix& m);

// rho(m) / rho(raw). Throws DomainError when the baseline is empty.
double volume(const SentenceMatrix& m, const SentenceMatrix& raw_baseline);

// G = S * S^T; entries are exact integers.
SymMatrix gram(const SentenceMatrix& m);

// Text dump: "P N strategy", one "row col count" line per nonzero, then the
// N vocabulary terms one per line.
void write_dump(std::ostream& out, const SentenceMatrix& m);
SentenceMatrix read_dump(std::istream& in);

}  // namespace ultrasumm

#endif  // ULTRASUMM_VSM_H_
