// Copyright 2026 The pfac-dna Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PFAC_DNA_H_
#define PFAC_DNA_H_

#include <array>
#include <cstdint>
#include <optional>

namespace pfac {

// The four nucleotides in transition-table column order.
enum class DnaSymbol : std::uint8_t { kA = 0, kT = 1, kC = 2, kG = 3 };

inline constexpr std::size_t kAlphabetSize = 4;
inline constexpr std::array<char, kAlphabetSize> kSymbolLetters = {'A', 'T',
                                                                   'C', 'G'};

// Code used in the byte lookup table for anything outside the alphabet.
inline constexpr std::uint8_t kNoSymbol = 0xff;

namespace internal {

constexpr std::array<std::uint8_t, 256> MakeSymbolTable() {
  std::array<std::uint8_t, 256> table{};
  for (auto& code : table) code = kNoSymbol;
  table['A'] = table['a'] = 0;
  table['T'] = table['t'] = 1;
  table['C'] = table['c'] = 2;
  table['G'] = table['g'] = 3;
  return table;
}

}  // namespace internal

// Byte -> column code (0..3), or kNoSymbol.
inline constexpr std::array<std::uint8_t, 256> kSymbolTable =
    internal::MakeSymbolTable();

// Case-insensitive. Returns nullopt for non-DNA characters; the caller decides
// whether that is an error or a scan barrier.
inline constexpr std::optional<DnaSymbol> EncodeSymbol(char ch) {
  const std::uint8_t code = kSymbolTable[static_cast<unsigned char>(ch)];
  if (code == kNoSymbol) return std::nullopt;
  return static_cast<DnaSymbol>(code);
}

inline constexpr bool IsDna(char ch) {
  return kSymbolTable[static_cast<unsigned char>(ch)] != kNoSymbol;
}

inline constexpr std::size_t Code(DnaSymbol symbol) {
  return static_cast<std::size_t>(symbol);
}

inline constexpr char Letter(DnaSymbol symbol) {
  return kSymbolLetters[Code(symbol)];
}

// Same as EncodeSymbol but throws NonDnaSymbolError at (line, column).
DnaSymbol EncodeSymbolOrThrow(char ch, std::size_t line, std::size_t column);

}  // namespace pfac

#endif  // PFAC_DNA_H_
