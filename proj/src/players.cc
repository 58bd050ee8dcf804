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

#include "olb/players.h"

#include "olb/norms.h"

namespace olb {

RoundRecord StaticPlayer::PlayRound(std::size_t t, Environment& env) {
  RoundRecord rec;
  rec.t = t;
  rec.alpha = alpha_;
  rec.load = env.NextLoad(t, rec.alpha);
  return rec;
}

RoundRecord HindsightFollowerPlayer::PlayRound(std::size_t t, Environment& env) {
  RoundRecord rec;
  rec.t = t;
  Vector smoothed = cum_load_;
  for (double& v : smoothed) v += kSmoothing;
  rec.alpha = CStarMinimizerInf(smoothed);
  rec.load = env.NextLoad(t, rec.alpha);
  for (std::size_t i = 0; i < cum_load_.size(); ++i) cum_load_[i] += rec.load[i];
  return rec;
}

}  // namespace olb
