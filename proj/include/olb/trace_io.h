// Copyright 2026 The OLB Authors.
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "olb/engine.h"

namespace olb {

inline constexpr const char* kTraceCsvHeader =
    "t,regret,bound,blackwell_gap,makespan,cstar_cum,olo_regret_1,olo_regret_2";

// One row per round, 12 significant digits, '\n' line endings.
void WriteTraceCsv(const RegretTrace& trace, std::ostream& out);
void WriteTraceCsvFile(const RegretTrace& trace, const std::string& path);

// Throws ConfigError on a missing file, a wrong header or a malformed row.
std::vector<TraceRow> ReadTraceCsv(std::istream& in);
std::vector<TraceRow> ReadTraceCsvFile(const std::string& path);

// {"k", "player", "rounds": [...]} with full round records (requires
// RunOptions::keep_rounds).
void WriteTraceJson(const RegretTrace& trace, std::ostream& out);

// "%.12g"
std::string FormatSignificant(double v);

}  // namespace olb
