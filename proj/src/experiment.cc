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

#include "olb/experiment.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "olb/trace_io.h"

namespace olb {

BoundReport CheckBound(const std::vector<TraceRow>& rows, double tol) {
  BoundReport report;
  if (rows.empty()) return report;
  const TraceRow& last = rows.back();
  report.horizon = last.t;
  report.regret = last.regret;
  report.bound = last.bound;
  report.ratio = last.bound > 0.0 ? last.regret / last.bound : 0.0;
  report.passed = last.regret <= last.bound;
  report.olo_regret_sum = last.olo_regret_1 + last.olo_regret_2;
  report.chain_budget = report.olo_regret_sum + static_cast<double>(last.t) * tol;
  report.chain_passed = last.regret <= report.chain_budget;
  return report;
}

std::string FormatBoundReport(const BoundReport& r) {
  std::ostringstream out;
  out << "horizon        " << r.horizon << '\n'
      << "regret         " << FormatSignificant(r.regret) << '\n'
      << "bound          " << FormatSignificant(r.bound) << '\n'
      << "ratio          " << FormatSignificant(r.ratio) << '\n'
      << "bound check    " << (r.passed ? "pass" : "FAIL") << '\n'
      << "olo regret sum " << FormatSignificant(r.olo_regret_sum) << '\n'
      << "chain budget   " << FormatSignificant(r.chain_budget) << '\n'
      << "chain check    " << (r.chain_passed ? "pass" : "FAIL") << '\n';
  return out.str();
}

std::vector<SweepRow> RunSweep(const GameConfig& base, const std::vector<std::size_t>& horizons,
                               unsigned workers) {
  std::vector<SweepRow> rows(horizons.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= horizons.size()) return;
      try {
        GameConfig config = base;
        config.t = horizons[i];
        const RegretTrace trace = RunConfig(config);
        SweepRow& row = rows[i];
        row.horizon = horizons[i];
        row.regret = trace.final_regret();
        row.bound = trace.rows.back().bound;
        row.ratio = row.bound > 0.0 ? row.regret / row.bound : 0.0;
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(horizons.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (std::thread& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

void WriteSweepCsv(const std::vector<SweepRow>& rows, std::ostream& out) {
  out << "T,regret,bound,ratio\n";
  for (const SweepRow& r : rows) {
    out << r.horizon << ',' << FormatSignificant(r.regret) << ',' << FormatSignificant(r.bound) << ','
        << FormatSignificant(r.ratio) << '\n';
  }
}

double LogLogSlope(const std::vector<SweepRow>& rows) {
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  int n = 0;
  for (const SweepRow& r : rows) {
    if (!(r.regret > 0.0) || r.horizon == 0) continue;
    const double x = std::log(static_cast<double>(r.horizon));
    const double y = std::log(r.regret);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  if (n < 2) return std::numeric_limits<double>::quiet_NaN();
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace olb
