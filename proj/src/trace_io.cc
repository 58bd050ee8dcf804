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

#include "olb/trace_io.h"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "olb/error.h"

namespace olb {

std::string FormatSignificant(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void WriteTraceCsv(const RegretTrace& trace, std::ostream& out) {
  out << kTraceCsvHeader << '\n';
  for (const TraceRow& r : trace.rows) {
    out << r.t << ',' << FormatSignificant(r.regret) << ',' << FormatSignificant(r.bound) << ','
        << FormatSignificant(r.blackwell_gap) << ',' << FormatSignificant(r.makespan) << ','
        << FormatSignificant(r.cstar_cum) << ',' << FormatSignificant(r.olo_regret_1) << ','
        << FormatSignificant(r.olo_regret_2) << '\n';
  }
}

void WriteTraceCsvFile(const RegretTrace& trace, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write trace to '" + path + "'");
  WriteTraceCsv(trace, out);
}

std::vector<TraceRow> ReadTraceCsv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kTraceCsvHeader) {
    throw ConfigError("trace CSV header does not match the expected schema");
  }
  std::vector<TraceRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    TraceRow r;
    char c1, c2, c3, c4, c5, c6, c7;
    fields >> r.t >> c1 >> r.regret >> c2 >> r.bound >> c3 >> r.blackwell_gap >> c4 >> r.makespan >> c5 >>
        r.cstar_cum >> c6 >> r.olo_regret_1 >> c7 >> r.olo_regret_2;
    if (!fields || c1 != ',' || c2 != ',' || c3 != ',' || c4 != ',' || c5 != ',' || c6 != ',' ||
        c7 != ',') {
      throw ConfigError("malformed trace row at line " + std::to_string(line_no));
    }
    rows.push_back(r);
  }
  return rows;
}

std::vector<TraceRow> ReadTraceCsvFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open trace '" + path + "'");
  return ReadTraceCsv(in);
}

void WriteTraceJson(const RegretTrace& trace, std::ostream& out) {
  nlohmann::json rounds = nlohmann::json::array();
  for (const RoundRecord& r : trace.rounds) {
    rounds.push_back({{"t", r.t},
                      {"w1", r.w.w1},
                      {"w2", r.w.w2},
                      {"alpha", r.alpha.vector()},
                      {"load", r.load.vector()},
                      {"support_x", r.support.x},
                      {"support_y", r.support.y},
                      {"g1", r.g1},
                      {"g2", r.g2},
                      {"game_value", r.game_value},
                      {"support_value", r.support_value},
                      {"blackwell_gap", r.blackwell_gap},
                      {"cum_player_load", r.cum_player_load},
                      {"cum_load", r.cum_load},
                      {"olo_regret_1", r.olo_regret_1},
                      {"olo_regret_2", r.olo_regret_2}});
  }
  nlohmann::json doc{{"k", trace.k}, {"player", trace.player}, {"rounds", rounds}};
  out << doc.dump() << '\n';
}

}  // namespace olb
