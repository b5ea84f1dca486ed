#!/usr/bin/env python3
# Copyright 2026 The spotty Authors
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
"""Independent brute-force derivation of the expected values frozen into the
C++ tests. Shares no code with the library; run it to regenerate:

    python3 tests/oracles/derive_values.py
"""
import itertools
from collections import Counter
from math import ceil, comb


def mul(a, b, m):
    r = 0
    for i in range(m):
        if b >> i & 1:
            r ^= a << i
    return r & ((1 << m) - 1)


def chi(x, m):
    return -1 if x >> (m - 1) & 1 else 1


def poly_str(coeffs):
    return {e: c for e, c in sorted(coeffs.items()) if c}


def span(rows, m):
    words = set()
    n = len(rows[0]) if rows else 0
    for a in itertools.product(range(1 << m), repeat=len(rows)):
        w = [0] * n
        for ai, row in zip(a, rows):
            for i in range(n):
                w[i] ^= mul(ai, row[i], m)
        words.add(tuple(w))
    return words


def spotty(w, b, t):
    return sum(ceil(sum(1 for x in w[i:i + b] if x) / t) for i in range(0, len(w), b))


def main():
    m, u = 4, 2
    G = [[1, 0, 0, u | 4, 0, 0], [0, 2, 0, 4, 0, 8], [0, 0, 4, 0, 8, 0]]
    C = span(G, m)
    print("section4 |C| =", len(C))
    W = Counter(spotty(w, 3, 2) for w in C)
    print("section4 W(z) =", poly_str(W))

    # F_j by brute force over R^b with the top-coefficient character.
    for j in range(4):
        c = [1] * j + [0] * (3 - j)
        F = Counter()
        for v in itertools.product(range(16), repeat=3):
            ip = 0
            for ci, vi in zip(c, v):
                ip ^= mul(ci, vi, m)
            F[ceil(sum(1 for x in v if x) / 2)] += chi(ip, m)
        print(f"F_{j}^(3,4) t=2 =", poly_str(F))

    # span of one row (u) over m=2, N=1
    print("span[(u)] m=2 =", sorted(span([[2]], 2)))

    # standard-form profile (2,1) over m=2: rows (1,0,0,1),(0,1,0,u),(0,0,u,u)
    print("profile (2,1) m=2 size =", len(span([[1, 0, 0, 1], [0, 1, 0, 2], [0, 0, 2, 2]], 2)))

    # A/B partitions by exhaustive search.
    for mm in (2, 3, 4):
        q = 1 << mm
        found = []
        for A in itertools.combinations(range(q), q // 2):
            A = set(A)
            if 0 not in A or 1 not in A:
                continue
            units = [x for x in range(q) if x & 1]
            zds = [x for x in range(q) if not x & 1]
            ok = 2 * len(A & set(units)) == len(units) and 2 * len(A & set(zds)) == len(zds)
            for k in range(mm):
                ideal = {x for x in range(q) if x & ((1 << k) - 1) == 0}
                ok = ok and 2 * len(A & ideal) == len(ideal)
            for x in range(q):
                for y in range(q):
                    s = x ^ y
                    ok = ok and ((s in A) == ((x in A) == (y in A)))
            if ok:
                found.append(sorted(A))
        print(f"partitions m={mm}:", found)

    # Character sums quoted in unit tests.
    def S(c, mm, pred):
        tot = 0
        for v in itertools.product(range(1 << mm), repeat=len(c)):
            if pred(v):
                ip = 0
                for ci, vi in zip(c, v):
                    ip ^= mul(ci, vi, mm)
                tot += chi(ip, mm)
        return tot

    supp = lambda c: {i for i, x in enumerate(c) if x}
    vs = lambda v: {i for i, x in enumerate(v) if x}
    c = (1, 2, 0)
    print("S_2((1,u,0)) m=2 =", S(c, 2, lambda v: vs(v) <= supp(c) and len(vs(v)) == 2))
    c = (1, 0, 0)
    print("Sbar_1((1,0,0)) m=4 =", S(c, 4, lambda v: not (vs(v) & supp(c)) and len(vs(v)) == 1))
    c = (1, 2)
    print("fixed-support (1,u) I={0,1} m=3 =", S(c, 3, lambda v: vs(v) == {0, 1}))
    c = (2, 1)
    print("subspace (u,1) I={0,1} m=4 =", S(c, 4, lambda v: True))
    c = (1, 1, 0)
    print("subspace (1,1,0) I={0} m=2 =", S(c, 2, lambda v: vs(v) <= {0}))
    # Literal partial-sum reading for a weight-3 byte, m=2.
    c = (1, 2, 3)
    for k in range(1, 4):
        lit = S(c, 2, lambda v: len(vs(v)) <= k)
        print(f"partial-weight (1,u,1+u) k={k} m=2 =", lit, " closed:", (-1) ** k * comb(2, k))
    print("sum chi(u2 r) m=4 =", sum(chi(mul(4, r, 4), 4) for r in range(16)))


if __name__ == "__main__":
    main()
