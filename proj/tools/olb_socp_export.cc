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

// olb_socp_export: emits the support-problem SOCP for random dual weights as
// JSON lines, each with the oracle's h value, for checking with a conic solver.

#include <cstdio>
#include <iostream>
#include <random>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "olb/support_oracle.h"
#include "olb/validation.h"

int main(int argc, char** argv) {
  CLI::App app{"Export support-problem SOCP instances"};
  std::size_t count = 20;
  std::size_t k_min = 2;
  std::size_t k_max = 5;
  std::uint64_t seed = 1;
  app.add_option("--count", count, "number of instances");
  app.add_option("--k-min", k_min, "smallest K")->check(CLI::PositiveNumber);
  app.add_option("--k-max", k_max, "largest K")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "seed for the random weights");
  CLI11_PARSE(app, argc, argv);
  if (k_max < k_min) {
    std::cerr << "--k-max must be at least --k-min\n";
    return 2;
  }

  std::mt19937_64 rng(seed);
  for (std::size_t n = 0; n < count; ++n) {
    const std::size_t k = k_min + static_cast<std::size_t>(rng() % (k_max - k_min + 1));
    const olb::DualWeight w = olb::RandomDualWeight(k, rng);
    const olb::SupportResult s = olb::SupportPointInf(w);
    nlohmann::json line;
    line["w1"] = w.w1;
    line["w2"] = w.w2;
    line["h_value"] = s.h_value;
    line["socp"] = nlohmann::json::parse(olb::SocpProblemToJson(olb::BuildSocpData(w)));
    std::cout << line.dump() << '\n';
  }
  return 0;
}
