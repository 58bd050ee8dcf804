# Copyright 2026 The OLB Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Straight-line reference transcript of the OLO-based load balancer, K=2.

Independent of the C++ code path: the allocation step uses scipy's LP
solver on the beta formulation, the support step uses SLSQP with
multiple starts on the original (x, y) program, and EG+- runs in the
plain (non-log) domain. Output is frozen into tests/engine_test.cc.
"""
import math

import numpy as np
from scipy.optimize import linprog, minimize

K = 2
T = 3
LOADS = [np.array([0.8, 0.0]), np.array([0.6, 0.2]), np.array([0.3, 0.8])]
eta = math.sqrt(2 * math.log(2 * K) / T)


def cstar(y):
    return 0.0 if (y <= 0).any() else 1.0 / (1.0 / y).sum()


def allocation(w1, w2):
    if not w1.any():
        return np.full(K, 1.0 / K)
    # variables: alpha (K), beta (K)
    c = np.concatenate([np.zeros(K), np.ones(K)])
    a_ub = np.hstack([np.diag(w1), -np.eye(K)])
    b_ub = -w2
    a_eq = np.concatenate([np.ones(K), np.zeros(K)])[None, :]
    res = linprog(c, A_ub=a_ub, b_ub=b_ub, A_eq=a_eq, b_eq=[1.0],
                  bounds=[(0, 1)] * K + [(0, None)] * K, method="highs")
    return res.x[:K]


def support(w1, w2):
    best = None
    def neg(v):
        x, y = v[:K], v[K:]
        return -(w1 @ x + w2 @ y)
    cons = [{"type": "ineq", "fun": (lambda v, i=i: cstar(np.maximum(v[K:], 1e-12)) - v[i])}
            for i in range(K)]
    rng = np.random.default_rng(0)
    for y0 in [np.ones(K), np.full(K, 0.5), rng.uniform(0.1, 1, K), rng.uniform(0.1, 1, K)]:
        v0 = np.concatenate([np.zeros(K), y0])
        res = minimize(neg, v0, constraints=cons, bounds=[(0, 1)] * (2 * K),
                       method="SLSQP", options={"ftol": 1e-14, "maxiter": 1000})
        if best is None or res.fun < best.fun:
            best = res
    # Compare with the y-degenerate face (x = 0).
    deg = np.concatenate([np.zeros(K), (w2 > 0).astype(float)])
    if best is None or neg(deg) <= best.fun:
        return deg
    return best.x


wp = np.full(K, 0.5 / K)
wm = np.full(K, 0.5 / K)
wp2 = wp.copy()
wm2 = wm.copy()
cum_a = np.zeros(K)
cum_l = np.zeros(K)
for t in range(T):
    w1 = wp - wm
    w2 = wp2 - wm2
    alpha = allocation(w1, w2)
    l = LOADS[t]
    s = support(w1, w2)
    g1 = -alpha * l + s[:K]
    g2 = -l + s[K:]
    cum_a += alpha * l
    cum_l += l
    regret = cum_a.max() - cstar(cum_l)
    print(f"round {t + 1}")
    print("  w1     ", repr(list(w1)))
    print("  w2     ", repr(list(w2)))
    print("  alpha  ", repr(list(alpha)))
    print("  s      ", repr(list(s)))
    print("  g1     ", repr(list(g1)))
    print("  g2     ", repr(list(g2)))
    print("  regret ", repr(regret))
    z = (wp * np.exp(-eta * g1)).sum() + (wm * np.exp(eta * g1)).sum()
    wp, wm = wp * np.exp(-eta * g1) / z, wm * np.exp(eta * g1) / z
    z = (wp2 * np.exp(-eta * g2)).sum() + (wm2 * np.exp(eta * g2)).sum()
    wp2, wm2 = wp2 * np.exp(-eta * g2) / z, wm2 * np.exp(eta * g2) / z
