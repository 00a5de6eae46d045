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

#include "ultrasumm/summarize.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>

#include "ultrasumm/error.h"
#include "ultrasumm/utf8.h"

namespace ultrasumm {
namespace {

// Integer Gram matrix, row-major, so that derived scores stay exact.
std::vector<Count> int_gram(const SentenceMatrix& m) {
  const std::size_t p = m.rows();
  std::vector<std::vector<std::pair<std::size_t, Count>>> by_col(m.cols());
  for (const auto& e : m.entries()) by_col[e.col].push_back({e.row, e.count});
  std::vector<Count> g(p * p, 0);
  for (const auto& col : by_col) {
    for (const auto& [a, va] : col) {
      for (const auto& [b, vb] : col) g[a * p + b] += va * vb;
    }
  }
  return g;
}

[[noreturn]] void bad_budget(std::string_view spec) {
  throw ConfigError("bad budget '" + std::string(spec) +
                    "' (expected words:<k>, sentences:<k> or percent:<p>)");
}

template <typename T>
T parse_number(std::string_view text, std::string_view spec) {
  T value{};
  const auto [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || end != text.data() + text.size()) {
    bad_budget(spec);
  }
  return value;
}

}  // namespace

SummarizerKind parse_summarizer(std::string_view name) {
  if (name == "cortex") return SummarizerKind::kCortex;
  if (name == "enertex") return SummarizerKind::kEnertex;
  if (name == "artex") return SummarizerKind::kArtex;
  throw ConfigError("unknown summarizer '" + std::string(name) +
                    "' (expected cortex, enertex or artex)");
}

std::string to_string(SummarizerKind kind) {
  switch (kind) {
    case SummarizerKind::kCortex: return "cortex";
    case SummarizerKind::kEnertex: return "enertex";
    case SummarizerKind::kArtex: return "artex";
  }
  return "?";
}

const std::vector<SummarizerKind>& all_summarizers() {
  static const std::vector<SummarizerKind> kAll = {
      SummarizerKind::kCortex, SummarizerKind::kEnertex,
      SummarizerKind::kArtex};
  return kAll;
}

std::vector<double> score_artex(const SentenceMatrix& m) {
  const std::size_t p = m.rows();
  const std::size_t n = m.cols();
  std::vector<double> out(p, 0.0);
  if (p == 0 || n == 0) return out;
  const auto colsum = m.col_sums();
  // (s_i . colsum) * |s_i| is an exact integer; divide once at the end.
  const double norm = static_cast<double>(p) * static_cast<double>(p) *
                      static_cast<double>(n);
  for (std::size_t i = 0; i < p; ++i) {
    const auto cols = m.row_cols(i);
    const auto counts = m.row_counts(i);
    Count dot = 0;
    for (std::size_t k = 0; k < cols.size(); ++k) {
      dot += counts[k] * colsum[cols[k]];
    }
    out[i] = static_cast<double>(dot) * static_cast<double>(m.row_sum(i)) /
             norm;
  }
  return out;
}

SymMatrix enertex_energy(const SentenceMatrix& m) {
  const std::size_t p = m.rows();
  const auto g = int_gram(m);
  SymMatrix e(p);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      Count s = 0;
      for (std::size_t k = 0; k < p; ++k) s += g[i * p + k] * g[k * p + j];
      e.set(i, j, static_cast<double>(s));
    }
  }
  return e;
}

std::vector<double> score_enertex(const SentenceMatrix& m) {
  const std::size_t p = m.rows();
  const auto g = int_gram(m);
  // sum_j |E_ij| = sum_k G_ik * (sum_j G_kj) since G >= 0.
  std::vector<Count> g_rows(p, 0);
  for (std::size_t k = 0; k < p; ++k) {
    for (std::size_t j = 0; j < p; ++j) g_rows[k] += g[k * p + j];
  }
  std::vector<double> out(p, 0.0);
  for (std::size_t i = 0; i < p; ++i) {
    Count s = 0;
    for (std::size_t k = 0; k < p; ++k) s += g[i * p + k] * g_rows[k];
    out[i] = static_cast<double>(s);
  }
  return out;
}

CortexMetrics cortex_metrics(const SentenceMatrix& m) {
  const std::size_t p = m.rows();
  CortexMetrics out;
  out.frequency.assign(p, 0.0);
  out.entropy.assign(p, 0.0);
  out.interaction.assign(p, 0.0);
  const auto g = int_gram(m);
  for (std::size_t i = 0; i < p; ++i) {
    const Count total = m.row_sum(i);
    out.frequency[i] = static_cast<double>(total);
    // Sorted so the result does not depend on column order.
    std::vector<Count> counts(m.row_counts(i).begin(), m.row_counts(i).end());
    std::sort(counts.begin(), counts.end());
    double h = 0.0;
    for (Count c : counts) {
      const double q = static_cast<double>(c) / static_cast<double>(total);
      h -= q * std::log(q);
    }
    out.entropy[i] = h;
    Count inter = 0;
    for (std::size_t j = 0; j < p; ++j) {
      if (j != i) inter += g[i * p + j];
    }
    out.interaction[i] = static_cast<double>(inter);
  }
  return out;
}

std::vector<double> score_cortex(const SentenceMatrix& m) {
  const auto metrics = cortex_metrics(m);
  const std::vector<std::vector<double>> lambdas = {
      minmax_normalize(metrics.frequency), minmax_normalize(metrics.entropy),
      minmax_normalize(metrics.interaction)};
  const double count = static_cast<double>(lambdas.size());
  std::vector<double> out(m.rows(), 0.5);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    double plus = 0.0;
    double minus = 0.0;
    for (const auto& lambda : lambdas) {
      if (lambda[i] > 0.5) plus += lambda[i] - 0.5;
      if (lambda[i] < 0.5) minus += 0.5 - lambda[i];
    }
    out[i] = 0.5 + (plus - minus) / (2.0 * count);
  }
  return out;
}

std::vector<double> score(SummarizerKind kind, const SentenceMatrix& m) {
  switch (kind) {
    case SummarizerKind::kCortex: return score_cortex(m);
    case SummarizerKind::kEnertex: return score_enertex(m);
    case SummarizerKind::kArtex: return score_artex(m);
  }
  return {};
}

std::vector<double> minmax_normalize(const std::vector<double>& values) {
  if (values.empty()) return {};
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const double min = *lo;
  const double range = *hi - min;
  std::vector<double> out(values.size(), 0.5);
  if (range > 0) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      out[i] = (values[i] - min) / range;
    }
  }
  return out;
}

std::string Budget::label() const {
  auto number = [](double v) {
    char buf[32];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, end);
  };
  switch (unit) {
    case Unit::kWords: return "words:" + number(value);
    case Unit::kSentences: return "sentences:" + number(value);
    case Unit::kPercent: return "percent:" + number(value);
  }
  return "?";
}

Budget parse_budget(std::string_view spec) {
  const auto colon = spec.find(':');
  const auto unit = spec.substr(0, colon);
  const auto amount =
      colon == std::string_view::npos ? std::string_view() : spec.substr(colon + 1);
  Budget b;
  if (unit == "words" || unit == "sentences") {
    b.unit = unit == "words" ? Budget::Unit::kWords : Budget::Unit::kSentences;
    b.value = static_cast<double>(parse_number<long long>(amount, spec));
  } else if (unit == "percent") {
    b.unit = Budget::Unit::kPercent;
    b.value = parse_number<double>(amount, spec);
  } else {
    bad_budget(spec);
  }
  if (!(b.value > 0) || !std::isfinite(b.value)) {
    throw ConfigError("budget must be positive: '" + std::string(spec) + "'");
  }
  return b;
}

std::size_t word_count(std::string_view surface) {
  const auto scalars = utf8::Decode(surface);
  if (!scalars) return 0;
  std::size_t words = 0;
  bool in_word = false;
  for (char32_t c : *scalars) {
    const bool space = utf8::IsWhitespace(c);
    if (!space && !in_word) ++words;
    in_word = !space;
  }
  return words;
}

SummaryScore extract(const std::vector<double>& scores, const Document& doc,
                     const Budget& budget) {
  const std::size_t p = doc.sentences.size();
  if (scores.size() != p) {
    throw DomainError("score count does not match sentence count");
  }
  SummaryScore out;
  out.scores = minmax_normalize(scores);
  out.budget = budget;
  std::vector<std::size_t> order(p);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const bool ea = doc.sentences[a].tokens.empty();
    const bool eb = doc.sentences[b].tokens.empty();
    if (ea != eb) return !ea;
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return a < b;
  });

  std::size_t take = 0;
  switch (budget.unit) {
    case Budget::Unit::kSentences:
      out.whole_document = budget.value > static_cast<double>(p);
      take = out.whole_document ? p : static_cast<std::size_t>(budget.value);
      break;
    case Budget::Unit::kPercent: {
      out.whole_document = budget.value > 100.0;
      const double want = std::ceil(budget.value * static_cast<double>(p) / 100.0);
      take = std::min(p, static_cast<std::size_t>(want));
      break;
    }
    case Budget::Unit::kWords: {
      std::size_t total = 0;
      for (const auto& s : doc.sentences) total += word_count(s.surface);
      out.whole_document = budget.value > static_cast<double>(total);
      std::size_t words = 0;
      while (take < p && static_cast<double>(words) < budget.value) {
        words += word_count(doc.sentences[order[take]].surface);
        ++take;
      }
      break;
    }
  }
  out.selected.assign(order.begin(), order.begin() + static_cast<long>(take));
  std::sort(out.selected.begin(), out.selected.end());
  return out;
}

std::string assemble(const SummaryScore& summary, const Document& doc) {
  std::string out;
  for (std::size_t i : summary.selected) {
    if (i >= doc.sentences.size()) {
      throw DomainError("selected sentence index out of range");
    }
    if (!out.empty()) out += ' ';
    out += doc.sentences[i].surface;
  }
  return out;
}

}  // namespace ultrasumm
