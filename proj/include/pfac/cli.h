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

#ifndef PFAC_CLI_H_
#define PFAC_CLI_H_

#include <cstddef>
#include <iosfwd>
#include <string>

#include "pfac/automaton.h"

namespace pfac {

// Entry point of the pfac-dna command-line tool. Writes normal output to
// `out` and one-line diagnostics to `err`; returns the process exit status.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

// Worker default: $PFAC_DNA_WORKERS if set to a positive integer, otherwise
// the hardware concurrency.
std::size_t DefaultWorkers();

// Human-readable dump used by `pfac-dna inspect`.
std::string InspectReport(const PatternSet& patterns, bool dump_table,
                          bool dump_failure);

}  // namespace pfac

#endif  // PFAC_CLI_H_
