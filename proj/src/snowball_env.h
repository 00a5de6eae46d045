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

#ifndef ULTRASUMM_SRC_SNOWBALL_ENV_H_
#define ULTRASUMM_SRC_SNOWBALL_ENV_H_

// Minimal Snowball runtime: a string with a cursor, forward/backward limits
// and a [bra, ket) slice. The stemmers are written against these primitives
// so that each rule maps one-to-one onto the published algorithm.

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>

namespace ultrasumm::snowball {

struct Among {
  std::u32string_view s;
  int result;
};

class Grouping {
 public:
  explicit Grouping(std::u32string_view chars) : chars_(chars) {}
  bool contains(char32_t c) const {
    return chars_.find(c) != std::u32string_view::npos;
  }

 private:
  std::u32string_view chars_;
};

class Env {
 public:
  explicit Env(std::u32string word)
      : current(std::move(word)),
        limit(static_cast<int>(current.size())),
        ket(limit) {}

  std::u32string current;
  int cursor = 0;
  int limit;
  int limit_backward = 0;
  int bra = 0;
  int ket;

  char32_t at(int i) const { return current[static_cast<std::size_t>(i)]; }

  bool in_grouping(const Grouping& g) {
    if (cursor >= limit || !g.contains(at(cursor))) return false;
    ++cursor;
    return true;
  }
  bool out_grouping(const Grouping& g) {
    if (cursor >= limit || g.contains(at(cursor))) return false;
    ++cursor;
    return true;
  }
  bool go_in_grouping(const Grouping& g) {
    while (cursor < limit) {
      if (!g.contains(at(cursor))) return true;
      ++cursor;
    }
    return false;
  }
  bool go_out_grouping(const Grouping& g) {
    while (cursor < limit) {
      if (g.contains(at(cursor))) return true;
      ++cursor;
    }
    return false;
  }
  bool in_grouping_b(const Grouping& g) {
    if (cursor <= limit_backward || !g.contains(at(cursor - 1))) return false;
    --cursor;
    return true;
  }
  bool out_grouping_b(const Grouping& g) {
    if (cursor <= limit_backward || g.contains(at(cursor - 1))) return false;
    --cursor;
    return true;
  }
  bool go_out_grouping_b(const Grouping& g) {
    while (cursor > limit_backward) {
      if (g.contains(at(cursor - 1))) return true;
      --cursor;
    }
    return false;
  }

  bool eq_s(std::u32string_view s) {
    const int n = static_cast<int>(s.size());
    if (limit - cursor < n) return false;
    if (std::u32string_view(current).substr(cursor, n) != s) return false;
    cursor += n;
    return true;
  }
  bool eq_s_b(std::u32string_view s) {
    const int n = static_cast<int>(s.size());
    if (cursor - limit_backward < n) return false;
    if (std::u32string_view(current).substr(cursor - n, n) != s) return false;
    cursor -= n;
    return true;
  }
  // Checks a single character before the cursor and steps over it.
  bool eq_c_b(char32_t c) {
    if (cursor <= limit_backward || at(cursor - 1) != c) return false;
    --cursor;
    return true;
  }
  bool eq_c(char32_t c) {
    if (cursor >= limit || at(cursor) != c) return false;
    ++cursor;
    return true;
  }

  // Longest entry matching at the cursor (forward). Returns its result and
  // advances the cursor, or 0 when nothing matches.
  int find_among(std::span<const Among> table) {
    const Among* best = nullptr;
    for (const auto& a : table) {
      const int n = static_cast<int>(a.s.size());
      if (limit - cursor < n) continue;
      if (std::u32string_view(current).substr(cursor, n) != a.s) continue;
      if (best == nullptr || n > static_cast<int>(best->s.size())) best = &a;
    }
    if (best == nullptr) return 0;
    cursor += static_cast<int>(best->s.size());
    return best->result;
  }

  // Longest entry ending at the cursor (backward).
  int find_among_b(std::span<const Among> table) {
    const Among* best = nullptr;
    for (const auto& a : table) {
      const int n = static_cast<int>(a.s.size());
      if (cursor - limit_backward < n) continue;
      if (std::u32string_view(current).substr(cursor - n, n) != a.s) continue;
      if (best == nullptr || n > static_cast<int>(best->s.size())) best = &a;
    }
    if (best == nullptr) return 0;
    cursor -= static_cast<int>(best->s.size());
    return best->result;
  }

  void replace_s(int c_bra, int c_ket, std::u32string_view s) {
    const int adjustment = static_cast<int>(s.size()) - (c_ket - c_bra);
    current.replace(c_bra, c_ket - c_bra, s);
    limit += adjustment;
    if (cursor >= c_ket) {
      cursor += adjustment;
    } else if (cursor > c_bra) {
      cursor = c_bra;
    }
  }
  void slice_from(std::u32string_view s) {
    replace_s(bra, ket, s);
    ket = bra + static_cast<int>(s.size());
  }
  void slice_del() { slice_from(U""); }
};

}  // namespace ultrasumm::snowball

#endif  // ULTRASUMM_SRC_SNOWBALL_ENV_H_
