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

// French stemmer.

#include "snowball_env.h"
#include "ultrasumm/stemmer.h"

namespace ultrasumm {
namespace {

using snowball::Among;
using snowball::Grouping;

const Grouping kV(U"aeiouyâàëéêèïîôûù");
const Grouping kOuxEnding(U"bhjlnp");
const Grouping kElisionChar(U"cdjlmnst");
const Grouping kKeepWithS(U"aiosuè");

constexpr Among kRegionExceptions[] = {
    {U"col", -1}, {U"ni", 1}, {U"par", -1}, {U"tap", -1}};

constexpr Among kPostlude[] = {
    {U"", 7}, {U"H", 6}, {U"He", 4}, {U"Hi", 5}, {U"I", 1}, {U"U", 2},
    {U"Y", 3}};

constexpr Among kEmentTail[] = {
    {U"iqU", 3}, {U"abl", 3}, {U"Ièr", 4}, {U"ièr", 4}, {U"eus", 2},
    {U"iv", 1}};

constexpr Among kIteTail[] = {
    {U"ic", 2}, {U"abil", 1}, {U"iv", 3}};

constexpr Among kStandard[] = {
    {U"iqUe", 1}, {U"atrice", 2}, {U"ance", 1}, {U"ence", 5}, {U"logie", 3},
    {U"able", 1}, {U"isme", 1}, {U"euse", 12}, {U"iste", 1}, {U"ive", 8},
    {U"if", 8}, {U"usion", 4}, {U"ation", 2}, {U"ution", 4}, {U"ateur", 2},
    {U"iqUes", 1}, {U"atrices", 2}, {U"ances", 1}, {U"ences", 5},
    {U"logies", 3}, {U"ables", 1}, {U"ismes", 1}, {U"euses", 12},
    {U"istes", 1}, {U"ives", 8}, {U"ifs", 8}, {U"usions", 4}, {U"ations", 2},
    {U"utions", 4}, {U"ateurs", 2}, {U"ments", 16}, {U"ements", 6},
    {U"issements", 13}, {U"ités", 7}, {U"ment", 16}, {U"ement", 6},
    {U"issement", 13}, {U"amment", 14}, {U"emment", 15}, {U"aux", 10},
    {U"eaux", 9}, {U"eux", 1}, {U"oux", 11}, {U"ité", 7}};

constexpr Among kIVerb[] = {
    {U"ira", 1}, {U"ie", 1}, {U"isse", 1}, {U"issante", 1}, {U"i", 1},
    {U"irai", 1}, {U"ir", 1}, {U"iras", 1}, {U"ies", 1}, {U"îmes", 1},
    {U"isses", 1}, {U"issantes", 1}, {U"îtes", 1}, {U"is", 1}, {U"irais", 1},
    {U"issais", 1}, {U"irions", 1}, {U"issions", 1}, {U"irons", 1},
    {U"issons", 1}, {U"issants", 1}, {U"it", 1}, {U"irait", 1},
    {U"issait", 1}, {U"issant", 1}, {U"iraIent", 1}, {U"issaIent", 1},
    {U"irent", 1}, {U"issent", 1}, {U"iront", 1}, {U"ît", 1}, {U"iriez", 1},
    {U"issiez", 1}, {U"irez", 1}, {U"issez", 1}};

constexpr Among kAiseGuard[] = {
    {U"al", 1}, {U"épl", -1}, {U"auv", -1}};

constexpr Among kVerb[] = {
    {U"a", 3}, {U"era", 2}, {U"aise", 4}, {U"asse", 3}, {U"ante", 3},
    {U"ée", 2}, {U"ai", 3}, {U"erai", 2}, {U"er", 2}, {U"as", 3},
    {U"eras", 2}, {U"âmes", 3}, {U"aises", 4}, {U"asses", 3}, {U"antes", 3},
    {U"âtes", 3}, {U"ées", 2}, {U"ais", 4}, {U"eais", 2}, {U"erais", 2},
    {U"ions", 1}, {U"erions", 2}, {U"assions", 3}, {U"erons", 2},
    {U"ants", 3}, {U"és", 2}, {U"ait", 3}, {U"erait", 2}, {U"ant", 3},
    {U"aIent", 3}, {U"eraIent", 2}, {U"èrent", 2}, {U"assent", 3},
    {U"eront", 2}, {U"ât", 3}, {U"ez", 2}, {U"iez", 2}, {U"eriez", 2},
    {U"assiez", 3}, {U"erez", 2}, {U"é", 2}};

constexpr Among kResidual[] = {
    {U"e", 3}, {U"Ière", 2}, {U"ière", 2}, {U"ion", 1}, {U"Ier", 2},
    {U"ier", 2}};

constexpr Among kDoubles[] = {
    {U"ell", -1}, {U"eill", -1}, {U"enn", -1}, {U"onn", -1}, {U"ett", -1}};

class FrenchRun : public snowball::Env {
 public:
  using Env::Env;

  void run() {
    elisions();
    cursor = 0;
    prelude();
    cursor = 0;
    mark_regions();
    limit_backward = cursor;
    cursor = limit;
    const int start = limit - cursor;
    bool changed = standard_suffix();
    if (!changed) {
      cursor = limit - start;
      changed = i_verb_suffix();
    }
    if (!changed) {
      cursor = limit - start;
      changed = verb_suffix();
    }
    if (changed) {
      cursor = limit - start;
      const int saved = limit - cursor;
      ket = cursor;
      if (eq_c_b(U'Y')) {
        bra = cursor;
        slice_from(U"i");
      } else if (eq_c_b(U'ç')) {
        bra = cursor;
        slice_from(U"c");
      } else {
        cursor = limit - saved;
      }
    } else {
      cursor = limit - start;
      residual_suffix();
    }
    cursor = limit - start;
    int saved = limit - cursor;
    un_double();
    cursor = limit - saved;
    saved = limit - cursor;
    un_accent();
    cursor = limit - saved;
    cursor = limit_backward;
    postlude();
  }

 private:
  int pv_ = 0;
  int p1_ = 0;
  int p2_ = 0;

  bool rv() const { return pv_ <= cursor; }
  bool r1() const { return p1_ <= cursor; }
  bool r2() const { return p2_ <= cursor; }

  bool elisions() {
    bra = cursor;
    if (!in_grouping(kElisionChar) && !eq_s(U"qu")) return false;
    if (!eq_c(U'\'')) return false;
    ket = cursor;
    if (cursor >= limit) return false;
    slice_del();
    return true;
  }

  // Marks vowels acting as consonants, and the diaeresis forms.
  bool mark_at_cursor() {
    const int here = cursor;
    if (in_grouping(kV)) {
      bra = cursor;
      const int next = cursor;
      if (eq_c(U'u')) {
        ket = cursor;
        if (in_grouping(kV)) {
          slice_from(U"U");
          return true;
        }
      }
      cursor = next;
      if (eq_c(U'i')) {
        ket = cursor;
        if (in_grouping(kV)) {
          slice_from(U"I");
          return true;
        }
      }
      cursor = next;
      if (eq_c(U'y')) {
        ket = cursor;
        slice_from(U"Y");
        return true;
      }
    }
    cursor = here;
    bra = cursor;
    if (eq_c(U'ë')) {
      ket = cursor;
      slice_from(U"He");
      return true;
    }
    cursor = here;
    bra = cursor;
    if (eq_c(U'ï')) {
      ket = cursor;
      slice_from(U"Hi");
      return true;
    }
    cursor = here;
    bra = cursor;
    if (eq_c(U'y')) {
      ket = cursor;
      if (in_grouping(kV)) {
        slice_from(U"Y");
        return true;
      }
    }
    cursor = here;
    if (!eq_c(U'q')) return false;
    bra = cursor;
    if (!eq_c(U'u')) return false;
    ket = cursor;
    slice_from(U"U");
    return true;
  }

  void prelude() {
    while (true) {
      const int outer = cursor;
      bool found = false;
      while (true) {
        const int here = cursor;
        if (mark_at_cursor()) {
          cursor = here;
          found = true;
          break;
        }
        cursor = here;
        if (cursor >= limit) break;
        ++cursor;
      }
      if (!found) {
        cursor = outer;
        break;
      }
    }
  }

  void mark_regions() {
    pv_ = limit;
    p1_ = limit;
    p2_ = limit;
    const int start = cursor;
    do {
      bool ok = false;
      if (in_grouping(kV) && in_grouping(kV) && cursor < limit) {
        ++cursor;
        ok = true;
      }
      if (!ok) {
        cursor = start;
        const int found = find_among(kRegionExceptions);
        ok = found != 0 && (found != 1 || in_grouping(kV));
      }
      if (!ok) {
        cursor = start;
        if (cursor >= limit) break;
        ++cursor;
        if (!go_out_grouping(kV)) break;
        ++cursor;
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
    while (true) {
      bra = cursor;
      const int found = find_among(kPostlude);
      ket = cursor;
      switch (found) {
        case 1: slice_from(U"i"); break;
        case 2: slice_from(U"u"); break;
        case 3: slice_from(U"y"); break;
        case 4: slice_from(U"ë"); break;
        case 5: slice_from(U"ï"); break;
        case 6: slice_del(); break;
        default:
          if (cursor >= limit) return;
          ++cursor;
          break;
      }
    }
  }

  // Deletes in R2, otherwise rewrites to `fallback`.
  void delete_or_replace(std::u32string_view fallback) {
    if (r2()) {
      slice_del();
    } else {
      slice_from(fallback);
    }
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
      case 2: {
        if (!r2()) return false;
        slice_del();
        const int saved = limit - cursor;
        ket = cursor;
        if (!eq_s_b(U"ic")) {
          cursor = limit - saved;
          break;
        }
        bra = cursor;
        delete_or_replace(U"iqU");
        break;
      }
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
        slice_from(U"ent");
        break;
      case 6: {
        if (!rv()) return false;
        slice_del();
        const int saved = limit - cursor;
        ket = cursor;
        const int tail = find_among_b(kEmentTail);
        if (tail == 0) {
          cursor = limit - saved;
          break;
        }
        bra = cursor;
        if (tail == 1) {
          if (!r2()) {
            cursor = limit - saved;
            break;
          }
          slice_del();
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
        } else if (tail == 2) {
          if (r2()) {
            slice_del();
          } else if (r1()) {
            slice_from(U"eux");
          } else {
            cursor = limit - saved;
          }
        } else if (tail == 3) {
          if (!r2()) {
            cursor = limit - saved;
            break;
          }
          slice_del();
        } else {
          if (!rv()) {
            cursor = limit - saved;
            break;
          }
          slice_from(U"i");
        }
        break;
      }
      case 7: {
        if (!r2()) return false;
        slice_del();
        const int saved = limit - cursor;
        ket = cursor;
        const int tail = find_among_b(kIteTail);
        if (tail == 0) {
          cursor = limit - saved;
          break;
        }
        bra = cursor;
        if (tail == 1) {
          delete_or_replace(U"abl");
        } else if (tail == 2) {
          delete_or_replace(U"iqU");
        } else {
          if (!r2()) {
            cursor = limit - saved;
            break;
          }
          slice_del();
        }
        break;
      }
      case 8: {
        if (!r2()) return false;
        slice_del();
        const int saved = limit - cursor;
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
        ket = cursor;
        if (!eq_s_b(U"ic")) {
          cursor = limit - saved;
          break;
        }
        bra = cursor;
        delete_or_replace(U"iqU");
        break;
      }
      case 9:
        slice_from(U"eau");
        break;
      case 10:
        if (!r1()) return false;
        slice_from(U"al");
        break;
      case 11:
        if (!in_grouping_b(kOuxEnding)) return false;
        slice_from(U"ou");
        break;
      case 12:
        if (r2()) {
          slice_del();
        } else {
          if (!r1()) return false;
          slice_from(U"eux");
        }
        break;
      case 13:
        if (!r1()) return false;
        if (!out_grouping_b(kV)) return false;
        slice_del();
        break;
      case 14:
        if (!rv()) return false;
        slice_from(U"ant");
        return false;
      case 15:
        if (!rv()) return false;
        slice_from(U"ent");
        return false;
      default: {
        const int saved = limit - cursor;
        if (!in_grouping_b(kV)) return false;
        if (!rv()) return false;
        cursor = limit - saved;
        slice_del();
        return false;
      }
    }
    return true;
  }

  bool i_verb_suffix() {
    if (cursor < pv_) return false;
    const int saved_limit = limit_backward;
    limit_backward = pv_;
    ket = cursor;
    if (find_among_b(kIVerb) == 0) {
      limit_backward = saved_limit;
      return false;
    }
    bra = cursor;
    if (eq_c_b(U'H') || !out_grouping_b(kV)) {
      limit_backward = saved_limit;
      return false;
    }
    slice_del();
    limit_backward = saved_limit;
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
    switch (found) {
      case 1:
        if (!r2()) return false;
        slice_del();
        break;
      case 2:
        slice_del();
        break;
      case 3: {
        const int saved = limit - cursor;
        if (eq_c_b(U'e') && rv()) {
          bra = cursor;
        } else {
          cursor = limit - saved;
        }
        slice_del();
        break;
      }
      default: {
        const int saved = limit - cursor;
        const int guard = find_among_b(kAiseGuard);
        if (guard == -1) return false;
        if (guard == 1 && cursor > limit_backward) {
          --cursor;
          if (cursor <= limit_backward) return false;
        }
        cursor = limit - saved;
        slice_del();
        break;
      }
    }
    return true;
  }

  bool residual_suffix() {
    const int start = limit - cursor;
    ket = cursor;
    if (eq_c_b(U's')) {
      bra = cursor;
      const int before_s = limit - cursor;
      if (eq_s_b(U"Hi") || out_grouping_b(kKeepWithS)) {
        cursor = limit - before_s;
        slice_del();
      } else {
        cursor = limit - start;
      }
    } else {
      cursor = limit - start;
    }
    if (cursor < pv_) return false;
    const int saved_limit = limit_backward;
    limit_backward = pv_;
    ket = cursor;
    const int found = find_among_b(kResidual);
    if (found == 0) {
      limit_backward = saved_limit;
      return false;
    }
    bra = cursor;
    if (found == 1) {
      if (!r2() || (!eq_c_b(U's') && !eq_c_b(U't'))) {
        limit_backward = saved_limit;
        return false;
      }
      slice_del();
    } else if (found == 2) {
      slice_from(U"i");
    } else {
      slice_del();
    }
    limit_backward = saved_limit;
    return true;
  }

  bool un_double() {
    const int saved = limit - cursor;
    if (find_among_b(kDoubles) == 0) return false;
    cursor = limit - saved;
    ket = cursor;
    if (cursor <= limit_backward) return false;
    --cursor;
    bra = cursor;
    slice_del();
    return true;
  }

  bool un_accent() {
    int count = 1;
    while (out_grouping_b(kV)) --count;
    if (count > 0) return false;
    ket = cursor;
    if (!eq_c_b(U'é') && !eq_c_b(U'è')) return false;
    bra = cursor;
    slice_from(U"e");
    return true;
  }
};

}  // namespace

std::u32string stem_french(std::u32string word) {
  FrenchRun run(std::move(word));
  run.run();
  return run.current;
}

}  // namespace ultrasumm
