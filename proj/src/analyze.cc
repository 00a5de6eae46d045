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

#include "ultrasumm/analyze.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <set>
#include <thread>

#include "ultrasumm/error.h"
#include "ultrasumm/utf8.h"
#include "ultrasumm/vsm.h"

namespace ultrasumm {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Uniform in [0, range), range >= 1.
std::uint64_t bounded(std::mt19937_64& gen, std::uint64_t range) {
  const std::uint64_t threshold = (0 - range) % range;
  std::uint64_t x = gen();
  while (x < threshold) x = gen();
  return x % range;
}

std::vector<double> permuted_triangle(const SymMatrix& a,
                                      const std::vector<std::size_t>& perm) {
  std::vector<double> out;
  out.reserve(a.order() * (a.order() - 1) / 2);
  for (std::size_t i = 1; i < a.order(); ++i) {
    for (std::size_t j = 0; j < i; ++j) out.push_back(a(perm[i], perm[j]));
  }
  return out;
}

}  // namespace

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw DomainError("samples differ in length");
  if (x.size() < 2) throw DomainError("need at least two observations");
  const double n = static_cast<double>(x.size());
  double mx = 0;
  double my = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    mx += x[k];
    my += y[k];
  }
  mx /= n;
  my /= n;
  double sxy = 0;
  double sxx = 0;
  double syy = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double dx = x[k] - mx;
    const double dy = y[k] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0 || syy == 0) {
    throw DomainError("degenerate matrix (constant distances)");
  }
  // sqrt(sxx * syy) rather than sqrt(sxx) * sqrt(syy): r(x, x) is exactly 1.
  const double r = sxy / std::sqrt(sxx * syy);
  return std::clamp(r, -1.0, 1.0);
}

double pearson_lower_triangle(const SymMatrix& a, const SymMatrix& b) {
  if (a.order() != b.order()) throw DomainError("matrix orders differ");
  if (a.order() < 3) throw DomainError("matrix order must be at least 3");
  const auto x = a.lower_triangle();
  const auto y = b.lower_triangle();
  return pearson(x, y);
}

std::vector<std::size_t> mantel_permutation(std::size_t order,
                                            std::uint64_t seed,
                                            std::uint64_t k) {
  std::mt19937_64 gen(splitmix64(seed + (k + 1) * 0x9E3779B97F4A7C15ULL));
  std::vector<std::size_t> perm(order);
  for (std::size_t i = 0; i < order; ++i) perm[i] = i;
  for (std::size_t i = order; i > 1; --i) {
    const auto j = static_cast<std::size_t>(bounded(gen, i));
    std::swap(perm[i - 1], perm[j]);
  }
  return perm;
}

MantelResult mantel_test(const SymMatrix& a, const SymMatrix& b,
                         std::size_t permutations, std::uint64_t seed,
                         std::size_t workers) {
  if (permutations < kMinPermutations) {
    throw ConfigError("at least " + std::to_string(kMinPermutations) +
                      " permutations are required");
  }
  MantelResult out;
  out.r_observed = pearson_lower_triangle(a, b);
  out.permutations = permutations;
  out.seed = seed;
  const auto y = b.lower_triangle();

  std::vector<double> null(permutations);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < permutations; k = next++) {
      const auto perm = mantel_permutation(a.order(), seed, k);
      null[k] = pearson(permuted_triangle(a, perm), y);
    }
  };
  workers = std::clamp<std::size_t>(workers, 1, permutations);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  double sum = 0;
  out.null_min = null.front();
  out.null_max = null.front();
  for (double r : null) {
    if (r >= out.r_observed) ++out.greater_or_equal;
    sum += r;
    out.null_min = std::min(out.null_min, r);
    out.null_max = std::max(out.null_max, r);
  }
  out.null_mean = sum / static_cast<double>(permutations);
  double ss = 0;
  for (double r : null) ss += (r - out.null_mean) * (r - out.null_mean);
  out.null_sd = std::sqrt(ss / static_cast<double>(permutations));
  out.p_value = static_cast<double>(out.greater_or_equal + 1) /
                static_cast<double>(permutations + 1);
  return out;
}

MantelResult mantel_between_normalizations(const Document& filtered,
                                           const NormalizationStrategy& a,
                                           const NormalizationStrategy& b,
                                           std::size_t permutations,
                                           std::uint64_t seed,
                                           std::size_t workers) {
  const auto ga = gram(vectorize(filtered, a));
  const auto gb = gram(vectorize(filtered, b));
  return mantel_test(ga, gb, permutations, seed, workers);
}

LetterRanking letter_ranking(const std::vector<Document>& corpus) {
  std::set<std::string> types;
  for (const auto& doc : corpus) {
    for (const auto& s : doc.sentences) {
      for (const auto& t : s.tokens) types.insert(t);
    }
  }
  LetterRanking out;
  out.types = types.size();
  for (const auto& t : types) {
    if (t.empty()) continue;
    ++out.counts[utf8::Prefix(t, 1)];
  }
  out.ranked.assign(out.counts.begin(), out.counts.end());
  std::stable_sort(out.ranked.begin(), out.ranked.end(),
                   [](const auto& x, const auto& y) {
                     return x.second > y.second;
                   });
  return out;
}

std::map<std::size_t, double> LengthDistribution::normalized() const {
  std::size_t peak = 0;
  for (const auto& [len, n] : histogram) peak = std::max(peak, n);
  std::map<std::size_t, double> out;
  for (const auto& [len, n] : histogram) {
    out[len] = peak ? static_cast<double>(n) / static_cast<double>(peak) : 0.0;
  }
  return out;
}

LengthDistribution word_length_distribution(
    const std::vector<Document>& corpus) {
  LengthDistribution out;
  std::size_t letters = 0;
  for (const auto& doc : corpus) {
    for (const auto& s : doc.sentences) {
      for (const auto& t : s.tokens) {
        const auto len = utf8::Length(t);
        ++out.histogram[len];
        letters += len;
        ++out.tokens;
      }
    }
  }
  if (out.tokens == 0) throw DomainError("no tokens in corpus");
  out.mean = static_cast<double>(letters) / static_cast<double>(out.tokens);
  std::size_t best = 0;
  for (const auto& [len, n] : out.histogram) {
    if (n > best) {
      best = n;
      out.mode = len;
    }
  }
  return out;
}

}  // namespace ultrasumm
