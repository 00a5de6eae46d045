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

#ifndef ULTRASUMM_ANALYZE_H_
#define ULTRASUMM_ANALYZE_H_

// Representation diagnostics: Pearson correlation of matrix triangles, the
// Mantel permutation test, first-letter rankings and word-length
// distributions.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ultrasumm/corpus_io.h"
#include "ultrasumm/normalize.h"
#include "ultrasumm/sym_matrix.h"

namespace ultrasumm {

// Pearson correlation of two equally long samples, clamped to [-1, 1].
// Throws DomainError when either sample is constant.
double pearson(std::span<const double> x, std::span<const double> y);

// Pearson over the strictly lower triangles. Needs equal orders >= 3.
double pearson_lower_triangle(const SymMatrix& a, const SymMatrix& b);

inline constexpr std::size_t kMinPermutations = 99;

struct MantelResult {
  double r_observed = 0;
  std::size_t permutations = 0;
  double p_value = 1;
  std::size_t greater_or_equal = 0;
  std::uint64_t seed = 0;
  // Summary of the permutation distribution of r.
  double null_mean = 0;
  double null_sd = 0;
  double null_min = 0;
  double null_max = 0;
};

// Permutation k (0-based) is drawn by Fisher-Yates from an mt19937_64
// seeded with splitmix64(seed + (k + 1) * golden), using rejection sampling
// for bounded integers. The result does not depend on `workers`.
std::vector<std::size_t> mantel_permutation(std::size_t order,
                                            std::uint64_t seed,
                                            std::uint64_t k);

// One-sided (upper tail) test: p = (#{r' >= r} + 1) / (permutations + 1),
// with rows and columns of `a` permuted together. Needs permutations >= 99.
MantelResult mantel_test(const SymMatrix& a, const SymMatrix& b,
                         std::size_t permutations, std::uint64_t seed,
                         std::size_t workers = 1);

// Mantel test between the Gram matrices of two normalizations of the same
// filtered document.
MantelResult mantel_between_normalizations(const Document& filtered,
                                           const NormalizationStrategy& a,
                                           const NormalizationStrategy& b,
                                           std::size_t permutations,
                                           std::uint64_t seed,
                                           std::size_t workers = 1);

struct LetterRanking {
  // Distinct token types per initial letter.
  std::map<std::string, std::size_t> counts;
  // By count descending, then letter ascending.
  std::vector<std::pair<std::string, std::size_t>> ranked;
  std::size_t types = 0;
};

LetterRanking letter_ranking(const std::vector<Document>& corpus);

struct LengthDistribution {
  std::map<std::size_t, std::size_t> histogram;  // letters -> occurrences
  std::size_t tokens = 0;
  double mean = 0;
  std::size_t mode = 0;  // smallest length on ties

  // Histogram scaled so that its maximum is 1.
  std::map<std::size_t, double> normalized() const;
};

// Letters are Unicode scalars. Throws DomainError when there are no tokens.
LengthDistribution word_length_distribution(
    const std::vector<Document>& corpus);

}  // namespace ultrasumm

#endif  // ULTRASUMM_ANALYZE_H_
