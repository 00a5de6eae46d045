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

#include <string>
#include <string_view>
#include <vector>

#include "ultrasumm/corpus_io.h"
#include "ultrasumm/error.h"

namespace ultrasumm {
namespace {

std::vector<std::string> Words(std::string_view blob) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < blob.size()) {
    while (i < blob.size() && (blob[i] == ' ' || blob[i] == '\n')) ++i;
    std::size_t j = i;
    while (j < blob.size() && blob[j] != ' ' && blob[j] != '\n') ++j;
    if (j > i) out.emplace_back(blob.substr(i, j - i));
    i = j;
  }
  return out;
}

// Function words only; content words such as "later" or "used" are kept.
constexpr std::string_view kEnglish = R"(
i me my myself we our ours ourselves you your yours yourself yourselves he
him his himself she her hers herself it its itself they them their theirs
themselves what which who whom this that these those am is are was were be
been being have has had having do does did doing a an the and but if or
because as until while of at by for with about against between into through
during before after above below to from up down in out on off over under
again further then once here there when where why how all any both each few
more most other some such no nor not only own same so than too very s t can
will just don should now d ll m o re ve y ain aren couldn didn doesn hadn
hasn haven isn ma mightn mustn needn shan shouldn wasn weren won wouldn also
would could might must shall may upon within without whether yet though
although however its onto per via
)";

constexpr std::string_view kSpanish = R"(
de la que el en y a los del se las por un para con no una su al lo como más
pero sus le ya o este sí porque esta entre cuando muy sin sobre también me
hasta hay donde quien desde todo nos durante todos uno les ni contra otros
ese eso ante ellos e esto mí antes algunos qué unos yo otro otras otra él
tanto esa estos mucho quienes nada muchos cual poco ella estar estas algunas
algo nosotros mi mis tú te ti tu tus ellas nosotras vosotros vosotras os mío
mía míos mías tuyo tuya tuyos tuyas suyo suya suyos suyas nuestro nuestra
nuestros nuestras vuestro vuestra vuestros vuestras esos esas estoy estás
está estamos estáis están esté estés estemos estéis estén estaré estará
estaba estabas estábamos estaban estuve estuvo estuvieron estado estados
estando he has ha hemos habéis han haya hayan habrá había habían hubo hubiera
habido soy eres es somos sois son sea seamos sean será serán sería serían
era eras éramos eran fui fue fuimos fueron fuera fueran sido siendo tengo
tienes tiene tenemos tienen tenía tenían tuvo tuvieron tenido teniendo u
cada cual cuales cuyo cuya así aunque pues mientras según tras lo sino
)";

constexpr std::string_view kFrench = R"(
au aux avec ce ces dans de des du elle en et eux il ils je la le les leur
lui ma mais me même mes moi mon ne nos notre nous on ou par pas pour qu que
qui sa se ses son sur ta te tes toi ton tu un une vos votre vous c d j l à m
n s t y été étée étées étés étant étante étants étantes suis es est sommes
êtes sont serai seras sera serons serez seront serais serait serions seriez
seraient étais était étions étiez étaient fus fut fûmes fûtes furent sois
soit soyons soyez soient fusse fusses fût fussions fussiez fussent ayant
ayante ayantes ayants eu eue eues eus ai as avons avez ont aurai auras aura
aurons aurez auront aurais aurait aurions auriez auraient avais avait avions
aviez avaient eut eûmes eûtes eurent aie aies ait ayons ayez aient cette
cet où leurs dont ainsi donc car si très plus tout tous toute toutes aussi
comme entre sans sous lors alors ceux celle celles celui cela ça
)";

}  // namespace

const std::vector<std::string>& supported_languages() {
  static const std::vector<std::string> kLanguages = {"en", "es", "fr"};
  return kLanguages;
}

bool is_supported_language(std::string_view language) {
  for (const auto& l : supported_languages()) {
    if (l == language) return true;
  }
  return false;
}

StopList builtin_stoplist(std::string_view language) {
  if (language == "en") return StopList("en", Words(kEnglish));
  if (language == "es") return StopList("es", Words(kSpanish));
  if (language == "fr") return StopList("fr", Words(kFrench));
  throw ConfigError("no built-in stop list for language '" +
                    std::string(language) + "'");
}

Abbreviations builtin_abbreviations(std::string_view language) {
  if (language == "en") {
    return {"mr",  "mrs", "ms",  "dr",  "prof", "sr",   "jr",  "st",
            "vs",  "etc", "inc", "ltd", "co",   "corp", "gen", "gov",
            "sen", "rep", "rev", "jan", "feb",  "mar",  "apr", "jun",
            "jul", "aug", "sep", "sept", "oct", "nov",  "dec", "e.g",
            "i.e", "u.s", "a.m", "p.m", "fig"};
  }
  if (language == "es") {
    return {"sr",  "sra", "srta", "dr",  "dra",  "ud",  "uds", "vd",
            "vds", "etc", "pág",  "págs", "núm", "art", "avda", "dña",
            "fig", "p.ej", "ee.uu"};
  }
  if (language == "fr") {
    return {"m",   "mm", "mme", "mlle", "mgr", "dr",  "pr",
            "etc", "cf", "av",  "bd",   "st",  "ste", "fig"};
  }
  throw ConfigError("no built-in abbreviations for language '" +
                    std::string(language) + "'");
}

}  // namespace ultrasumm
