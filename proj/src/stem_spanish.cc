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

// Spanish stemmer.

#include "snowball_env.h"
#include "ultrasumm/stemmer.h"

namespace ultrasumm {
namespace {

using snowball::Among;
using snowball::Grouping;

const Grouping kV(U"aeiouáéíóúü");

constexpr Among kPronouns[] = {
    {U"la", -1}, {U"sela", -1}, {U"le", -1}, {U"me", -1}, {U"se", -1},
    {U"lo", -1}, {U"selo", -1}, {U"las", -1}, {U"selas", -1}, {U"les", -1},
    {U"los", -1}, {U"selos", -1}, {U"nos", -1}};

constexpr Among kPronounHosts[] = {
    {U"ando", 6}, {U"iendo", 6}, {U"yendo", 7}, {U"ándo", 2}, {U"iéndo", 1},
    {U"ar", 6}, {U"er", 6}, {U"ir", 6}, {U"ár", 3}, {U"ér", 4}, {U"ír", 5}};

constexpr Among kAmenteTail[] = {
    {U"ic", -1}, {U"ad", -1}, {U"os", -1}, {U"iv", 1}};

constexpr Among kMenteTail[] = {
    {U"able", 1}, {U"ible", 1}, {U"ante", 1}};

constexpr Among kIdadTail[] = {
    {U"ic", 1}, {U"abil", 1}, {U"iv", 1}};

constexpr Among kStandard[] = {
    {U"ica", 1}, {U"ancia", 2}, {U"encia", 5}, {U"adora", 2}, {U"osa", 1},
    {U"ista", 1}, {U"iva", 9}, {U"anza", 1}, {U"logía", 3}, {U"idad", 8},
    {U"able", 1}, {U"ible", 1}, {U"ante", 2}, {U"mente", 7}, {U"amente", 6},
    {U"acion", 2}, {U"ucion", 4}, {U"ación", 2}, {U"ución", 4}, {U"ico", 1},
    {U"ismo", 1}, {U"oso", 1}, {U"amiento", 1}, {U"imiento", 1}, {U"ivo", 9},
    {U"ador", 2}, {U"icas", 1}, {U"ancias", 2}, {U"encias", 5},
    {U"adoras", 2}, {U"osas", 1}, {U"istas", 1}, {U"ivas", 9}, {U"anzas", 1},
    {U"logías", 3}, {U"idades", 8}, {U"ables", 1}, {U"ibles", 1},
    {U"aciones", 2}, {U"uciones", 4}, {U"adores", 2}, {U"antes", 2},
    {U"icos", 1}, {U"ismos", 1}, {U"osos", 1}, {U"amientos", 1},
    {U"imientos", 1}, {U"ivos", 9}};

constexpr Among kYVerb[] = {
    {U"ya", 1}, {U"ye", 1}, {U"yan", 1}, {U"yen", 1}, {U"yeron", 1},
    {U"yendo", 1}, {U"yo", 1}, {U"yas", 1}, {U"yes", 1}, {U"yais", 1},
    {U"yamos", 1}, {U"yó", 1}};

constexpr Among kVerb[] = {
    {U"aba", 2}, {U"ada", 2}, {U"ida", 2}, {U"ara", 2}, {U"iera", 2},
    {U"ía", 2}, {U"aría", 2}, {U"ería", 2}, {U"iría", 2}, {U"ad", 2},
    {U"ed", 2}, {U"id", 2}, {U"ase", 2}, {U"iese", 2}, {U"aste", 2},
    {U"iste", 2}, {U"an", 2}, {U"aban", 2}, {U"aran", 2}, {U"ieran", 2},
    {U"ían", 2}, {U"arían", 2}, {U"erían", 2}, {U"irían", 2}, {U"en", 1},
    {U"asen", 2}, {U"iesen", 2}, {U"aron", 2}, {U"ieron", 2}, {U"arán", 2},
    {U"erán", 2}, {U"irán", 2}, {U"ado", 2}, {U"ido", 2}, {U"ando", 2},
    {U"iendo", 2}, {U"ar", 2}, {U"er", 2}, {U"ir", 2}, {U"as", 2},
    {U"abas", 2}, {U"adas", 2}, {U"idas", 2}, {U"aras", 2}, {U"ieras", 2},
    {U"ías", 2}, {U"arías", 2}, {U"erías", 2}, {U"irías", 2}, {U"es", 1},
    {U"ases", 2}, {U"ieses", 2}, {U"abais", 2}, {U"arais", 2}, {U"ierais", 2},
    {U"íais", 2}, {U"aríais", 2}, {U"eríais", 2}, {U"iríais", 2},
    {U"aseis", 2}, {U"ieseis", 2}, {U"asteis", 2}, {U"isteis", 2},
    {U"áis", 2}, {U"éis", 1}, {U"aréis", 2}, {U"eréis", 2}, {U"iréis", 2},
    {U"ados", 2}, {U"idos", 2}, {U"amos", 2}, {U"ábamos", 2}, {U"áramos", 2},
    {U"iéramos", 2}, {U"íamos", 2}, {U"aríamos", 2}, {U"eríamos", 2},
    {U"iríamos", 2}, {U"emos", 1}, {U"aremos", 2}, {U"eremos", 2},
    {U"iremos", 2}, {U"ásemos", 2}, {U"iésemos", 2}, {U"imos", 2},
    {U"arás", 2}, {U"erás", 2}, {U"irás", 2}, {U"ís", 2}, {U"ará", 2},
    {U"erá", 2}, {U"irá", 2}, {U"aré", 2}, {U"eré", 2}, {U"iré", 2},
    {U"ió", 2}};

constexpr Among kResidual[] = {
    {U"a", 1}, {U"e", 2}, {U"o", 1}, {U"os", 1}, {U"á", 1}, {U"é", 2},
    {U"í", 1}, {U"ó", 1}};

class SpanishRun : public snowball::Env {
 public:
  using Env::Env;

  void run() {
    mark_regions();
    limit_backward = cursor;
    cursor = limit;
    int saved = limit - cursor;
    attached_pronoun();
    cursor = limit - saved;
    saved = limit - cursor;
    if (!standard_suffix()) {
      cursor = limit - saved;
      if (!y_verb_suffix()) {
        cursor = limit - saved;
        verb_suffix();
      }
    }
    cursor = limit - saved;
    residual_suffix();
    cursor = limit_backward;
    postlude();
  }

 private:
  int pv_ = 0;
  int p1_ = 0;
  int p2_ = 0;

  bool rv() const { return pv_ <= cursor; }
  bool r2() const { return p2_ <= cursor; }

  void mark_regions() {
    pv_ = limit;
    p1_ = limit;
    p2_ = limit;
    const int start = cursor;
    do {
      bool ok = false;
      if (in_grouping(kV)) {
        const int here = cursor;
        if (out_grouping(kV) && go_out_grouping(kV)) {
          ++cursor;
          ok = true;
        } else {
          cursor = here;
          if (in_grouping(kV) && go_in_grouping(kV)) {
            ++cursor;
            ok = true;
          }
        }
      }
      if (!ok) {
        cursor = start;
        if (!out_grouping(kV)) break;
        const int here = cursor;
        if (out_grouping(kV) && go_out_grouping(kV)) {
          ++cursor;
        } else {
          cursor = here;
          if (!in_grouping(kV)) break;
          if (cursor >= limit) break;
          ++cursor;
        }
      }
      pv_ = cursor;
    } while (false);
    cursor = start;
    do {
      if (!go_out_grouping(kV)) break;
      ++cursor;
      if (!go_in_grouping(kV)) break;
      ++cursor;
      p1_ = cursor;
      if (!go_out_grouping(kV)) break;
      ++cursor;
      if (!go_in_grouping(kV)) break;
      ++cursor;
      p2_ = cursor;
    } while (false);
    cursor = start;
  }

  void postlude() {
    for (auto& c : current) {
      switch (c) {
        case U'á': c = U'a'; break;
        case U'é': c = U'e'; break;
        case U'í': c = U'i'; break;
        case U'ó': c = U'o'; break;
        case U'ú': c = U'u'; break;
        default: break;
      }
    }
  }

  bool attached_pronoun() {
    ket = cursor;
    if (find_among_b(kPronouns) == 0) return false;
    bra = cursor;
    const int found = find_among_b(kPronounHosts);
    if (found == 0) return false;
    if (!rv()) return false;
    switch (found) {
      case 1: bra = cursor; slice_from(U"iendo"); break;
      case 2: bra = cursor; slice_from(U"ando"); break;
      case 3: bra = cursor; slice_from(U"ar"); break;
      case 4: bra = cursor; slice_from(U"er"); break;
      case 5: bra = cursor; slice_from(U"ir"); break;
      case 6: slice_del(); break;
      default:
        if (!eq_c_b(U'u')) return false;
        slice_del();
        break;
    }
    return true;
  }

  // Optionally removes one more suffix inside R2.
  void try_delete_r2(std::u32string_view s) {
    const int saved = limit - cursor;
    ket = cursor;
    if (!eq_s_b(s)) {
      cursor = limit - saved;
      return;
    }
    bra = cursor;
    if (!r2()) {
      cursor = limit - saved;
      return;
    }
    slice_del();
  }

  void try_delete_r2(std::span<const Among> table) {
    const int saved = limit - cursor;
    ket = cursor;
    if (find_among_b(table) == 0) {
      cursor = limit - saved;
      return;
    }
    bra = cursor;
    if (!r2()) {
      cursor = limit - saved;
      return;
    }
    slice_del();
  }

  bool standard_suffix() {
    ket = cursor;
    const int found = find_among_b(kStandard);
    if (found == 0) return false;
    bra = cursor;
    switch (found) {
      case 1:
        if (!r2()) return false;
        slice_del();
        break;
      case 2:
        if (!r2()) return false;
        slice_del();
        try_delete_r2(U"ic");
        break;
      case 3:
        if (!r2()) return false;
        slice_from(U"log");
        break;
      case 4:
        if (!r2()) return false;
        slice_from(U"u");
        break;
      case 5:
        if (!r2()) return false;
        slice_from(U"ente");
        break;
      case 6: {
        if (p1_ > cursor) return false;
        slice_del();
        const int saved = limit - cursor;
        ket = cursor;
        const int tail = find_among_b(kAmenteTail);
        if (tail == 0) {
          cursor = limit - saved;
          break;
        }
        bra = cursor;
        if (!r2()) {
          cursor = limit - saved;
          break;
        }
        slice_del();
        if (tail == 1) {
          ket = cursor;
          if (!eq_s_b(U"at")) {
            cursor = limit - saved;
            break;
          }
          bra = cursor;
          if (!r2()) {
            cursor = limit - saved;
            break;
          }
          slice_del();
        }
        break;
      }
      case 7:
        if (!r2()) return false;
        slice_del();
        try_delete_r2(kMenteTail);
        break;
      case 8:
        if (!r2()) return false;
        slice_del();
        try_delete_r2(kIdadTail);
        break;
      default:
        if (!r2()) return false;
        slice_del();
        try_delete_r2(U"at");
        break;
    }
    return true;
  }

  bool y_verb_suffix() {
    if (cursor < pv_) return false;
    const int saved_limit = limit_backward;
    limit_backward = pv_;
    ket = cursor;
    if (find_among_b(kYVerb) == 0) {
      limit_backward = saved_limit;
      return false;
    }
    bra = cursor;
    limit_backward = saved_limit;
    if (!eq_c_b(U'u')) return false;
    slice_del();
    return true;
  }

  bool verb_suffix() {
    if (cursor < pv_) return false;
    const int saved_limit = limit_backward;
    limit_backward = pv_;
    ket = cursor;
    const int found = find_among_b(kVerb);
    if (found == 0) {
      limit_backward = saved_limit;
      return false;
    }
    bra = cursor;
    limit_backward = saved_limit;
    if (found == 1) {
      // "gu" + e/en/es/emos/éis: drop the u as well.
      const int saved = limit - cursor;
      if (eq_c_b(U'u')) {
        const int after_u = limit - cursor;
        if (eq_c_b(U'g')) {
          cursor = limit - after_u;
        } else {
          cursor = limit - saved;
        }
      } else {
        cursor = limit - saved;
      }
      bra = cursor;
    }
    slice_del();
    return true;
  }

  bool residual_suffix() {
    ket = cursor;
    const int found = find_among_b(kResidual);
    if (found == 0) return false;
    bra = cursor;
    if (!rv()) return false;
    slice_del();
    if (found == 1) return true;
    const int saved = limit - cursor;
    ket = cursor;
    if (!eq_c_b(U'u')) {
      cursor = limit - saved;
      return true;
    }
    bra = cursor;
    const int after_u = limit - cursor;
    if (!eq_c_b(U'g')) {
      cursor = limit - saved;
      return true;
    }
    cursor = limit - after_u;
    if (!rv()) {
      cursor = limit - saved;
      return true;
    }
    slice_del();
    return true;
  }
};

}  // namespace

std::u32string stem_spanish(std::u32string word) {
  SpanishRun run(std::move(word));
  run.run();
  return run.current;
}

}  // namespace ultrasumm
