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

// English (Porter2) stemmer.

#include "snowball_env.h"
#include "ultrasumm/stemmer.h"

namespace ultrasumm {
namespace {

using snowball::Among;
using snowball::Grouping;

const Grouping kV(U"aeiouy");
const Grouping kVWXY(U"Yaeiouwxy");
const Grouping kValidLi(U"cdeghkmnrt");
const Grouping kAeo(U"aeo");

// Prefixes after which R1 starts regardless of the usual rule.
constexpr Among kR1Prefixes[] = {
    {U"arsen", -1}, {U"commun", -1}, {U"emerg", -1},
    {U"gener", -1}, {U"inter", -1},  {U"later", -1},
    {U"organ", -1}, {U"past", -1},   {U"univers", -1}};

constexpr Among kApostrophe[] = {{U"'", 1}, {U"'s'", 1}, {U"'s", 1}};

constexpr Among kStep1a[] = {{U"ied", 2}, {U"s", 3},   {U"ies", 2},
                             {U"sses", 1}, {U"ss", -1}, {U"us", -1}};

constexpr Among kEedPrefixes[] = {{U"succ", 1}, {U"proc", 1}, {U"exc", 1}};

constexpr Among kIngExceptions[] = {{U"even", 2}, {U"cann", 2}, {U"inn", 2},
                                    {U"earr", 2}, {U"herr", 2}, {U"out", 2},
                                    {U"y", 1}};

constexpr Among kStep1b[] = {{U"", -1},    {U"ed", 2},    {U"eed", 1},
                             {U"ing", 3},  {U"edly", 2},  {U"eedly", 1},
                             {U"ingly", 2}};

constexpr Among kStep1bEnding[] = {
    {U"", 3},   {U"bb", 2}, {U"dd", 2}, {U"ff", 2}, {U"gg", 2},
    {U"bl", 1}, {U"mm", 2}, {U"nn", 2}, {U"pp", 2}, {U"rr", 2},
    {U"at", 1}, {U"tt", 2}, {U"iz", 1}};

constexpr Among kStep2[] = {
    {U"anci", 3},    {U"enci", 2},    {U"ogi", 14},    {U"li", 16},
    {U"bli", 12},    {U"abli", 4},    {U"alli", 8},    {U"fulli", 9},
    {U"lessli", 15}, {U"ousli", 10},  {U"entli", 5},   {U"aliti", 8},
    {U"biliti", 12}, {U"iviti", 11},  {U"tional", 1},  {U"ational", 7},
    {U"alism", 8},   {U"ation", 7},   {U"ization", 6}, {U"izer", 6},
    {U"ator", 7},    {U"iveness", 11}, {U"fulness", 9}, {U"ousness", 10},
    {U"ogist", 13}};

constexpr Among kStep3[] = {{U"icate", 4},  {U"ative", 6},   {U"alize", 3},
                            {U"iciti", 4},  {U"ical", 4},    {U"tional", 1},
                            {U"ational", 2}, {U"ful", 5},    {U"ness", 5}};

constexpr Among kStep4[] = {
    {U"ic", 1},  {U"ance", 1}, {U"ence", 1}, {U"able", 1}, {U"ible", 1},
    {U"ate", 1}, {U"ive", 1},  {U"ize", 1},  {U"iti", 1},  {U"al", 1},
    {U"ism", 1}, {U"ion", 2},  {U"er", 1},   {U"ous", 1},  {U"ant", 1},
    {U"ent", 1}, {U"ment", 1}, {U"ement", 1}};

constexpr Among kStep5[] = {{U"e", 1}, {U"l", 2}};

constexpr Among kExceptions[] = {
    {U"andes", -1}, {U"atlas", -1}, {U"bias", -1},  {U"cosmos", -1},
    {U"early", 6},  {U"gently", 4}, {U"howe", -1},  {U"idly", 3},
    {U"news", -1},  {U"only", 7},   {U"singly", 8}, {U"skies", 2},
    {U"skis", 1},   {U"sky", -1},   {U"ugly", 5}};
constexpr std::u32string_view kExceptionForms[] = {
    U"ski", U"sky", U"idl", U"gentl", U"ugli", U"earli", U"onli", U"singl"};

class EnglishRun : public snowball::Env {
 public:
  using Env::Env;

  void run() {
    if (exception1()) return;
    cursor = 0;
    if (limit < 3) return;
    prelude();
    mark_regions();
    limit_backward = cursor;
    cursor = limit;
    step(&EnglishRun::step_1a);
    step(&EnglishRun::step_1b);
    step(&EnglishRun::step_1c);
    step(&EnglishRun::step_2);
    step(&EnglishRun::step_3);
    step(&EnglishRun::step_4);
    step(&EnglishRun::step_5);
    cursor = limit_backward;
    postlude();
  }

 private:
  bool y_found_ = false;
  int p1_ = 0;
  int p2_ = 0;

  void step(bool (EnglishRun::*fn)()) {
    const int saved = limit - cursor;
    (this->*fn)();
    cursor = limit - saved;
  }

  bool r1() const { return p1_ <= cursor; }
  bool r2() const { return p2_ <= cursor; }

  bool exception1() {
    bra = cursor;
    const int found = find_among(kExceptions);
    if (found == 0) return false;
    ket = cursor;
    if (cursor < limit) return false;
    if (found > 0) slice_from(kExceptionForms[found - 1]);
    return true;
  }

  void prelude() {
    const int start = cursor;
    bra = cursor;
    if (eq_c(U'\'')) {
      ket = cursor;
      slice_del();
    }
    cursor = start;
    bra = cursor;
    if (eq_c(U'y')) {
      ket = cursor;
      slice_from(U"Y");
      y_found_ = true;
    }
    cursor = start;
    // y after a vowel becomes Y.
    while (true) {
      const int outer = cursor;
      bool found = false;
      while (true) {
        const int here = cursor;
        if (in_grouping(kV)) {
          bra = cursor;
          if (eq_c(U'y')) {
            ket = cursor;
            cursor = here;
            found = true;
            break;
          }
        }
        cursor = here;
        if (cursor >= limit) break;
        ++cursor;
      }
      if (!found) {
        cursor = outer;
        break;
      }
      slice_from(U"Y");
      y_found_ = true;
    }
    cursor = start;
  }

  void mark_regions() {
    p1_ = limit;
    p2_ = limit;
    const int start = cursor;
    do {
      const int here = cursor;
      if (find_among(kR1Prefixes) == 0) {
        cursor = here;
        if (!go_out_grouping(kV)) break;
        ++cursor;
        if (!go_in_grouping(kV)) break;
        ++cursor;
      }
      p1_ = cursor;
      if (!go_out_grouping(kV)) break;
      ++cursor;
      if (!go_in_grouping(kV)) break;
      ++cursor;
      p2_ = cursor;
    } while (false);
    cursor = start;
  }

  bool shortv() {
    const int saved = limit - cursor;
    if (out_grouping_b(kVWXY) && in_grouping_b(kV) && out_grouping_b(kV)) {
      return true;
    }
    cursor = limit - saved;
    if (out_grouping_b(kV) && in_grouping_b(kV) && cursor <= limit_backward) {
      return true;
    }
    cursor = limit - saved;
    return eq_s_b(U"past");
  }

  bool step_1a() {
    const int saved = limit - cursor;
    ket = cursor;
    if (find_among_b(kApostrophe) == 0) {
      cursor = limit - saved;
    } else {
      bra = cursor;
      slice_del();
    }
    ket = cursor;
    const int found = find_among_b(kStep1a);
    if (found == 0) return false;
    bra = cursor;
    switch (found) {
      case 1:
        slice_from(U"ss");
        break;
      case 2:
        if (cursor - 2 >= limit_backward) {
          cursor -= 2;
          slice_from(U"i");
        } else {
          slice_from(U"ie");
        }
        break;
      case 3:
        if (cursor <= limit_backward) return false;
        --cursor;
        if (!go_out_grouping_b(kV)) return false;
        --cursor;
        slice_del();
        break;
      default:
        break;
    }
    return true;
  }

  bool step_1b() {
    ket = cursor;
    int found = find_among_b(kStep1b);
    bra = cursor;
    const int suffix_start = limit - cursor;
    switch (found) {
      case 1: {
        const int saved = limit - cursor;
        if (r1()) {
          const int before = limit - cursor;
          if (!(find_among_b(kEedPrefixes) != 0 &&
                cursor <= limit_backward)) {
            cursor = limit - before;
            slice_from(U"ee");
          }
        }
        cursor = limit - saved;
        return true;
      }
      case 2:
        break;
      case 3: {
        const int which = find_among_b(kIngExceptions);
        if (which == 1) {
          const int saved = limit - cursor;
          if (out_grouping_b(kV) && cursor <= limit_backward) {
            cursor = limit - saved;
            bra = cursor;
            slice_from(U"ie");
            return true;
          }
        } else if (which != 0 && cursor <= limit_backward) {
          return true;
        }
        break;
      }
      default:
        return true;
    }
    // Delete ed/ing if the preceding part contains a vowel, then tidy up.
    cursor = limit - suffix_start;
    const int saved = limit - cursor;
    if (!go_out_grouping_b(kV)) return false;
    --cursor;
    cursor = limit - saved;
    slice_del();
    ket = cursor;
    bra = cursor;
    const int end = limit - cursor;
    found = find_among_b(kStep1bEnding);
    if (found == 1) {
      slice_from(U"e");
      return false;
    }
    if (found == 2) {
      const int here = limit - cursor;
      if (in_grouping_b(kAeo) && cursor <= limit_backward) return false;
      cursor = limit - here;
    } else {
      if (cursor != p1_) return false;
      const int here = limit - cursor;
      if (!shortv()) return false;
      cursor = limit - here;
      slice_from(U"e");
      return false;
    }
    cursor = limit - end;
    ket = cursor;
    if (cursor <= limit_backward) return false;
    --cursor;
    bra = cursor;
    slice_del();
    return true;
  }

  bool step_1c() {
    ket = cursor;
    if (!eq_c_b(U'y') && !eq_c_b(U'Y')) return false;
    bra = cursor;
    if (!out_grouping_b(kV)) return false;
    if (cursor <= limit_backward) return false;
    slice_from(U"i");
    return true;
  }

  bool step_2() {
    ket = cursor;
    const int found = find_among_b(kStep2);
    if (found == 0) return false;
    bra = cursor;
    if (!r1()) return false;
    switch (found) {
      case 1: slice_from(U"tion"); break;
      case 2: slice_from(U"ence"); break;
      case 3: slice_from(U"ance"); break;
      case 4: slice_from(U"able"); break;
      case 5: slice_from(U"ent"); break;
      case 6: slice_from(U"ize"); break;
      case 7: slice_from(U"ate"); break;
      case 8: slice_from(U"al"); break;
      case 9: slice_from(U"ful"); break;
      case 10: slice_from(U"ous"); break;
      case 11: slice_from(U"ive"); break;
      case 12: slice_from(U"ble"); break;
      case 13: slice_from(U"og"); break;
      case 14:
        if (!eq_c_b(U'l')) return false;
        slice_from(U"og");
        break;
      case 15: slice_from(U"less"); break;
      default:
        if (!in_grouping_b(kValidLi)) return false;
        slice_del();
        break;
    }
    return true;
  }

  bool step_3() {
    ket = cursor;
    const int found = find_among_b(kStep3);
    if (found == 0) return false;
    bra = cursor;
    if (!r1()) return false;
    switch (found) {
      case 1: slice_from(U"tion"); break;
      case 2: slice_from(U"ate"); break;
      case 3: slice_from(U"al"); break;
      case 4: slice_from(U"ic"); break;
      case 5: slice_del(); break;
      default:
        if (!r2()) return false;
        slice_del();
        break;
    }
    return true;
  }

  bool step_4() {
    ket = cursor;
    const int found = find_among_b(kStep4);
    if (found == 0) return false;
    bra = cursor;
    if (!r2()) return false;
    if (found == 2 && !eq_c_b(U's') && !eq_c_b(U't')) return false;
    slice_del();
    return true;
  }

  bool step_5() {
    ket = cursor;
    const int found = find_among_b(kStep5);
    if (found == 0) return false;
    bra = cursor;
    if (found == 1) {
      if (!r2()) {
        if (!r1()) return false;
        const int saved = limit - cursor;
        if (shortv()) return false;
        cursor = limit - saved;
      }
      slice_del();
      return true;
    }
    if (!r2()) return false;
    if (!eq_c_b(U'l')) return false;
    slice_del();
    return true;
  }

  void postlude() {
    if (!y_found_) return;
    for (auto& c : current) {
      if (c == U'Y') c = U'y';
    }
  }
};

}  // namespace

std::u32string stem_english(std::u32string word) {
  EnglishRun run(std::move(word));
  run.run();
  return run.current;
}

}  // namespace ultrasumm
