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

#include "pfac/dna.h"

#include "pfac/error.h"

namespace pfac {

DnaSymbol EncodeSymbolOrThrow(char ch, std::size_t line, std::size_t column) {
  if (auto symbol = EncodeSymbol(ch)) return *symbol;
  throw NonDnaSymbolError(ch, line, column);
}

}  // namespace pfac
