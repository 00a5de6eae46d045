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

#ifndef ULTRASUMM_STEMMER_H_
#define ULTRASUMM_STEMMER_H_

// Snowball suffix-stripping stemmers for English (Porter2), Spanish and
// French. Input is a lowercase UTF-8 word; output is its stem. Behaviour
// tracks the Snowball 3.x reference algorithms.

#include <string>
#include <string_view>

namespace ultrasumm {

class Stemmer {
 public:
  virtual ~Stemmer() = default;
  virtual std::string stem(std::string_view word) const = 0;
  virtual std::string_view language() const = 0;
};

// Shared, stateless instance. Throws ConfigError for unsupported languages.
const Stemmer& stemmer_for(std::string_view language);

std::u32string stem_english(std::u32string word);
std::u32string stem_spanish(std::u32string word);
std::u32string stem_french(std::u32string word);

}  // namespace ultrasumm

#endif  // ULTRASUMM_STEMMER_H_
