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

#include "ultrasumm/stemmer.h"

#include <string>

#include "ultrasumm/error.h"
#include "ultrasumm/utf8.h"

namespace ultrasumm {
namespace {

using StemFn = std::u32string (*)(std::u32string);

class SnowballStemmer final : public Stemmer {
 public:
  SnowballStemmer(std::string_view language, StemFn fn)
      : language_(language), fn_(fn) {}

  std::string stem(std::string_view word) const override {
    auto scalars = utf8::Decode(word);
    if (!scalars) return std::string(word);
    return utf8::Encode(fn_(std::move(*scalars)));
  }

  std::string_view language() const override { return language_; }

 private:
  std::string_view language_;
  StemFn fn_;
};

}  // namespace

const Stemmer& stemmer_for(std::string_view language) {
  static const SnowballStemmer kEnglish("en", &stem_english);
  static const SnowballStemmer kSpanish("es", &stem_spanish);
  static const SnowballStemmer kFrench("fr", &stem_french);
  if (language == "en") return kEnglish;
  if (language == "es") return kSpanish;
  if (language == "fr") return kFrench;
  throw ConfigError("no stemmer for language '" + std::string(language) + "'");
}

}  // namespace ultrasumm
