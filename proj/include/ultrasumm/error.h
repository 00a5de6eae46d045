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

#ifndef ULTRASUMM_ERROR_H_
#define ULTRASUMM_ERROR_H_

#include <stdexcept>
#include <string>

namespace ultrasumm {

// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Corpus could not be read (missing directory, unreadable file).
class IngestError : public Error {
 public:
  using Error::Error;
};

// Invalid strategy, budget, or other configuration value.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Malformed input file (lemma dictionary, stop list, matrix dump).
class FormatError : public Error {
 public:
  using Error::Error;
};

// Input is valid but a computation is undefined for it.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace ultrasumm

#endif  // ULTRASUMM_ERROR_H_
