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

"""Solve exported support-problem SOCPs with cvxpy and compare to the oracle.

Usage: olb_socp_export --count 50 | python3 tools/socp_check.py
Exit 0 when every instance agrees within --tol, 1 otherwise, 77 when cvxpy
is not installed.
"""
import argparse
import json
import sys

try:
    import cvxpy as cp
except ImportError:
    sys.exit(77)


def affine(v, expr):
    out = expr["constant"]
    for index, coef in expr["terms"]:
        out = out + coef * v[index]
    return out


def solve(socp):
    v = cp.Variable(socp["num_variables"])
    constraints = []
    for cone in socp["cones"]:
        constraints.append(
            cp.SOC(affine(v, cone["bound"]), cp.hstack([affine(v, cone["u"]), affine(v, cone["v"])])))
    for eq in socp["equalities"]:
        constraints.append(affine(v, eq["lhs"]) == eq["rhs"])
    for box in socp["boxes"]:
        constraints.append(v[box["variable"]] >= box["lower"])
        constraints.append(v[box["variable"]] <= box["upper"])
    problem = cp.Problem(cp.Minimize(socp["objective"] @ v), constraints)
    problem.solve(solver=cp.CLARABEL)
    return -problem.value


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--tol", type=float, default=1e-5)
    args = parser.parse_args()
    worst = 0.0
    count = 0
    failures = 0
    for line in sys.stdin:
        if not line.strip():
            continue
        item = json.loads(line)
        h_conic = solve(item["socp"])
        diff = abs(h_conic - item["h_value"])
        worst = max(worst, diff)
        count += 1
        if diff > args.tol:
            failures += 1
            print(f"mismatch K={item['socp']['k']}: conic {h_conic:.9g} oracle {item['h_value']:.9g}")
    print(f"{count} instances, {failures} mismatches, worst |diff| {worst:.3g}")
    sys.exit(1 if failures or count == 0 else 0)


if __name__ == "__main__":
    main()
