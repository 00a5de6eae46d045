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

#ifndef ULTRASUMM_UTF8_H_
#define ULTRASUMM_UTF8_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace ultrasumm::utf8 {

// Decodes UTF-8 into scalar values. Returns nullopt on malformed input
// (overlong forms, surrogates, truncated sequences, values > U+10FFFF).
std::optional<std::u32string> Decode(std::string_view text);

// Decodes, throwing FormatError on malformed input.
std::u32string DecodeOrThrow(std::string_view text);

std::string Encode(std::u32string_view scalars);
void Append(std::string& out, char32_t c);

bool IsValid(std::string_view text);

// Simple case mapping for Latin, Greek and Cyrillic blocks.
char32_t ToLower(char32_t c);
bool IsUpper(char32_t c);

bool IsWhitespace(char32_t c);

// Characters removed during token filtering: punctuation and symbols
// (ASCII, Latin-1, General Punctuation and related blocks) plus digits.
bool IsPunctOrDigit(char32_t c);

std::string Lowercase(std::string_view text);

// Number of scalar values in a valid UTF-8 string.
std::size_t Length(std::string_view text);

// First `n` scalar values of a valid UTF-8 string.
std::string Prefix(std::string_view text, std::size_t n);

// First scalar value, or U+0000 for an empty string.
char32_t First(std::string_view text);

}  // namespace ultrasumm::utf8

#endif  // ULTRASUMM_UTF8_H_
