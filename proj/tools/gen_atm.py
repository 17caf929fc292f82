#!/usr/bin/env python3
# Copyright 2026 The faspkit Authors
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
"""Writes the ground ATM location program (two ATMs, three towns).

The gloc body quantifies over unordered town pairs, which the grounder's
X != Y guards cannot express, so the instance is generated here.
"""

import itertools
import sys

LICENSE = """% Copyright 2026 The faspkit Authors
%
% Licensed under the Apache License, Version 2.0 (the "License");
% you may not use this file except in compliance with the License.
% You may obtain a copy of the License at
%
%     http://www.apache.org/licenses/LICENSE-2.0
%
% Unless required by applicable law or agreed to in writing, software
% distributed under the License is distributed on an "AS IS" BASIS,
% WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
% See the License for the specific language governing permissions and
% limitations under the License.

"""

ATMS = ["a1", "a2"]
TOWNS = ["t1", "t2", "t3"]
NEAR = {("t1", "t2"): "0.8", ("t1", "t3"): "0.7", ("t2", "t3"): "0.5"}


def near_fact(t, u):
    if t == u:
        return "1"
    return NEAR.get((t, u)) or NEAR[(u, t)]


def rules():
    pairs = list(itertools.product(TOWNS, TOWNS))
    for a, (t1, t2) in itertools.product(ATMS, pairs):
        beta = [f"not_m loc({a},{u1},{u2})" for u1, u2 in pairs if {u1, u2} != {t1, t2}]
        body = ", ".join([f"conn({t1},{t2})"] + beta)
        yield f"gloc_{a}_{t1}_{t2}: loc({a},{t1},{t2}) <- TL({body})."
    for a, t1 in itertools.product(ATMS, TOWNS):
        yield f"gnear_{a}_{t1}: locNear({a},{t1}) <- not_l locNear'({a},{t1})."
    for a, t1, t2 in itertools.product(ATMS, TOWNS, TOWNS):
        if t1 == t2:
            continue
        yield (f"gnear'_{a}_{t1}_{t2}: locNear'({a},{t1}) <- "
               f"TL(loc({a},{t1},{t2}), not_l near({t1},{t2}), locNear({a},{t2})).")
    for t1, t2, t3 in itertools.product(TOWNS, TOWNS, TOWNS):
        yield (f"nearr_{t1}_{t2}_{t3}: near({t1},{t2}) <- "
               f"TL(conn({t1},{t3}), near({t1},{t3}), near({t3},{t2})).")
    for a, t1, t2 in itertools.product(ATMS, TOWNS, TOWNS):
        yield f"locr_{a}_{t1}_{t2}: loc({a},{t1},{t2}) <- loc({a},{t2},{t1})."
    for a, t, t1, t2 in itertools.product(ATMS, TOWNS, TOWNS, TOWNS):
        yield (f"atmr_{a}_{t}_{t1}_{t2}: ATMNear({a},{t}) <- "
               f"TL(loc({a},{t1},{t2}), locNear({a},{t1}), near({t},{t1})).")
    every = ", ".join(f"ATMNear({a},{t})" for a, t in itertools.product(ATMS, TOWNS))
    yield f"tDist: totNear <- TL({every})."
    for t, u in itertools.product(TOWNS, TOWNS):
        yield f"conn({t},{u}) <- 1."
    for t, u in itertools.product(TOWNS, TOWNS):
        yield f"near({t},{u}) <- {near_fact(t, u)}."


def main():
    out = sys.stdout
    out.write(LICENSE)
    out.write("% Ground ATM location program: ATM = {a1, a2}, Towns = {t1, t2, t3}.\n")
    out.write("% Generated by tools/gen_atm.py.\n")
    for r in rules():
        out.write(r + "\n")


if __name__ == "__main__":
    main()
