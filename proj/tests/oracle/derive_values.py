# Copyright 2026 The qlattice Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Independent reference computations for the values frozen in the C++ tests.

Subspaces are represented as frozensets of vectors (their full point sets),
built by closing spanning sets under addition and scaling. Nothing here shares
code or representation with the library. Run: python3 derive_values.py
"""

import itertools
import json
import math
from fractions import Fraction
from functools import lru_cache

import numpy as np


# --- GF(p^m) by brute-force search for an irreducible polynomial -------------

def factor_prime_power(q):
    for p in range(2, q + 1):
        if q % p == 0:
            m, r = 0, q
            while r % p == 0:
                r //= p
                m += 1
            assert r == 1
            return p, m


def poly_mulmod(a, b, mod, p):
    # Coefficient lists, least significant first; mod is monic of degree m.
    m = len(mod) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    for d in range(len(prod) - 1, m - 1, -1):
        c = prod[d]
        if c:
            for i in range(m + 1):
                prod[d - m + i] = (prod[d - m + i] - c * mod[i]) % p
    return (prod + [0] * m)[:m]


class GF:
    def __init__(self, q):
        self.q = q
        self.p, self.m = factor_prime_power(q)
        p, m = self.p, self.m
        self.elems = [tuple((e // p**i) % p for i in range(m)) for e in range(q)]
        if m == 1:
            self.mod = [0, 1]
        else:
            for tail in itertools.product(range(p), repeat=m):
                mod = list(tail) + [1]
                if self._is_field(mod):
                    self.mod = mod
                    break
        self.mul_t = [[self._code(poly_mulmod(list(self.elems[a]), list(self.elems[b]),
                                                self.mod, p)) if m > 1 else (a * b) % p
                       for b in range(q)] for a in range(q)]
        self.add_t = [[self._code([(x + y) % p for x, y in zip(self.elems[a], self.elems[b])])
                       for b in range(q)] for a in range(q)]
        self.inv_t = [None] + [next(b for b in range(1, q) if self.mul_t[a][b] == 1)
                               for a in range(1, q)]

    def _code(self, coeffs):
        return sum(c * self.p**i for i, c in enumerate(coeffs))

    def _is_field(self, mod):
        p, m = self.p, self.m
        nonzero = [list(e) for e in itertools.product(range(p), repeat=m) if any(e)]
        for a in nonzero:
            for b in nonzero:
                if not any(poly_mulmod(a, b, mod, p)):
                    return False
        return True


# --- Subspaces as point sets --------------------------------------------------

def span(field, n, gens):
    q = field.q
    pts = {tuple([0] * n)}
    for g in gens:
        new = set()
        for v in pts:
            for c in range(q):
                w = tuple(field.add_t[v[i]][field.mul_t[c][g[i]]] for i in range(n))
                new.add(w)
        pts = new
    return frozenset(pts)


def dim_of(field, pts):
    return round(math.log(len(pts), field.q))


@lru_cache(maxsize=None)
def all_subspaces(q, n):
    field = GF(q)
    vectors = list(itertools.product(range(q), repeat=n))
    found = {frozenset([tuple([0] * n)])}
    frontier = set(found)
    while frontier:
        nxt = set()
        for s in frontier:
            for v in vectors:
                if v not in s:
                    t = span(field, n, [v] + basis_of(field, n, s))
                    if t not in found:
                        found.add(t)
                        nxt.add(t)
        frontier = nxt
    by_dim = {}
    for s in found:
        by_dim.setdefault(dim_of(field, s), []).append(s)
    return field, by_dim


def basis_of(field, n, pts):
    basis, cur = [], frozenset([tuple([0] * n)])
    for v in sorted(pts):
        if v not in cur:
            basis.append(v)
            cur = span(field, n, basis)
    return basis


def dot(field, u, v):
    s = 0
    for a, b in zip(u, v):
        s = field.add_t[s][field.mul_t[a][b]]
    return s


def perp(field, n, pts):
    return frozenset(v for v in itertools.product(range(field.q), repeat=n)
                     if all(dot(field, v, u) == 0 for u in pts))


def shadow(level_below, family):
    return {b for b in level_below if any(b <= a for a in family)}


# --- q-numbers with Fractions and the q-Pascal recurrence ------------------------

@lru_cache(maxsize=None)
def qbinom(q, n, k):
    if k < 0 or k > n:
        return 0
    if k == 0 or k == n:
        return 1
    return qbinom(q, n - 1, k - 1) + q**k * qbinom(q, n - 1, k)


def qint(q, x):
    return (q**x - 1) // (q - 1)


def thm1(q, n, k):
    if k in (1, n):
        return Fraction(0)
    return Fraction(q * (q**(k - 1) - 1) * (q**(n - k) - 1),
                    (q**k - 1) * (q**(n - k + 1) - 1))


def qbinom_real(q, x, k):
    r = 1.0
    for i in range(k):
        r *= (q**(x - i) - 1) / (q**(k - i) - 1)
    return r


def frac(f):
    return f"{f.numerator}/{f.denominator}"


def main():
    out = {}

    f5, f4, f9 = GF(5), GF(4), GF(9)
    out["gf5_inv2"] = f5.inv_t[2]
    out["gf4_cube_is_one"] = all(f4.mul_t[f4.mul_t[a][a]][a] == 1 for a in range(1, 4))
    out["gf9_inverses_ok"] = all(f9.mul_t[a][f9.inv_t[a]] == 1 for a in range(1, 9))

    # Enumeration counts: brute force where cheap, recurrence everywhere.
    counts = {}
    for q, nmax in ((2, 6), (3, 5), (4, 4), (5, 4)):
        for n in range(nmax + 1):
            for k in range(n + 1):
                counts[f"{q},{n},{k}"] = qbinom(q, n, k)
    out["qbinom"] = counts
    brute = {}
    for q, nmax in ((2, 5), (3, 3), (4, 3)):
        for n in range(1, nmax + 1):
            _, by_dim = all_subspaces(q, n)
            for k in range(n + 1):
                brute[f"{q},{n},{k}"] = len(by_dim.get(k, []))
                assert brute[f"{q},{n},{k}"] == qbinom(q, n, k)
    out["brute_counts_agree"] = len(brute)

    out["thm1"] = {f"{q},{n},{k}": frac(thm1(q, n, k))
                   for q in (2, 3) for n in range(1, 6) for k in range(1, n + 1)}
    out["thm1_max_over_1_over_q"] = max(
        thm1(q, n, k) * q for q in (2, 3, 4, 5) for n in range(1, 9) for k in range(1, n + 1))

    # Inverse x for target 2, k = 2: 2^{x-1} solves 2u^2 - 3u - 5 = 0.
    u = (3 + math.sqrt(9 + 40)) / 4
    out["inverse_x_2_2_2"] = 1 + math.log2(u)
    out["inverse_x_closed_form"] = 1 + math.log2(2.5)

    # Spectra from dense adjacency matrices.
    def grassmann_spectrum(q, n, k):
        _, by_dim = all_subspaces(q, n)
        verts = by_dim[k]
        a = np.array([[1.0 if i != j and dim_of(GF(q), verts[i] & verts[j]) == k - 1 else 0.0
                       for j in range(len(verts))] for i in range(len(verts))])
        ev = np.linalg.eigvalsh(a)
        vals = {}
        for e in ev:
            key = int(round(e))
            assert abs(e - key) < 1e-8
            vals[key] = vals.get(key, 0) + 1
        return dict(sorted(vals.items(), reverse=True))

    out["spectrum_2_4_2"] = grassmann_spectrum(2, 4, 2)
    out["spectrum_2_5_2"] = grassmann_spectrum(2, 5, 2)
    out["spectrum_2_3_1"] = grassmann_spectrum(2, 3, 1)

    # Exhaustive L_2(3,2): density bound equalities.
    field, by_dim = all_subspaces(2, 3)
    planes, lines = sorted(by_dim[2], key=sorted), sorted(by_dim[1], key=sorted)
    c = thm1(2, 3, 2)
    eq_families = []
    violations = 0
    min_shadow_by_size = {}
    for r in range(1, 8):
        for fam in itertools.combinations(planes, r):
            sh = shadow(lines, fam)
            mu = Fraction(len(fam), 7)
            z = 1 / mu - 1
            bound = 1 / (1 + c * z)
            actual = Fraction(len(sh), 7)
            if actual < bound:
                violations += 1
            if actual == bound:
                eq_families.append(fam)
            min_shadow_by_size[r] = min(min_shadow_by_size.get(r, 99), len(sh))
    singletons = sum(1 for f in eq_families if len(f) == 1)
    avoider_sets = {frozenset(p for p in planes if not ln <= p) for ln in lines}
    avoiders = sum(1 for f in eq_families if frozenset(f) in avoider_sets)
    full = sum(1 for f in eq_families if len(f) == 7)
    out["l232_equalities"] = len(eq_families)
    out["l232_equalities_singletons"] = singletons
    out["l232_equalities_line_avoiders"] = avoiders
    out["l232_equalities_full_level"] = full
    out["l232_violations"] = violations
    out["l232_min_shadow_by_size"] = min_shadow_by_size

    # L_2(4,2): 7 planes of a 3-space, and the minimum over 28-subsets via
    # the removed 7-subsets (a line leaves the shadow iff its whole star goes).
    field4, by4 = all_subspaces(2, 4)
    planes4 = sorted(by4[2], key=sorted)
    lines4 = sorted(by4[1], key=sorted)
    three = sorted(by4[3], key=sorted)[0]
    inside = [p for p in planes4 if p <= three]
    out["l242_planes_in_3space"] = len(inside)
    out["l242_shadow_planes_in_3space"] = len(shadow(lines4, inside))
    star_masks = []
    for ln in lines4:
        star_masks.append(sum(1 << i for i, p in enumerate(planes4) if ln <= p))
    best = 15
    for removed in itertools.combinations(range(35), 7):
        mask = 0
        for i in removed:
            mask |= 1 << i
        lost = sum(1 for s in star_masks if s & mask == s)
        best = min(best, 15 - lost)
    out["l242_min_shadow_size28"] = best
    one_line = lines4[0]
    avoid = [p for p in planes4 if not one_line <= p]
    out["l242_line_avoider_size"] = len(avoid)
    out["l242_line_avoider_shadow"] = len(shadow(lines4, avoid))

    # Combined bound ingredients at (2,3,2,|S|=2).
    mu = Fraction(2, 7)
    z = 1 / mu - 1
    out["combined_232_2_z"] = frac(z)
    out["combined_232_2_density"] = float(7 / (1 + c * z))
    x = 1 + math.log2(2.5)
    out["combined_232_2_kruskal"] = qbinom_real(2, x, 1)
    y = math.log2(6)
    out["combined_232_2_dual"] = 7 - qbinom_real(2, y, 2)

    # Flag ideals.
    def flag_densities(q, n, j):
        field, by_dim = all_subspaces(q, n)
        vj = span(field, n, [tuple(1 if i == t else 0 for i in range(n)) for t in range(j)])
        vj1 = span(field, n, [tuple(1 if i == t else 0 for i in range(n)) for t in range(j - 1)])
        dens = []
        for k in range(n + 1):
            members = [a for a in by_dim[k] if (a & vj) <= vj1]
            dens.append(Fraction(len(members), len(by_dim[k])))
        return dens

    flags = {}
    for q, nmax in ((2, 5), (3, 4)):
        for n in range(2, nmax + 1):
            for j in range(1, n + 1):
                flags[f"{q},{n},{j}"] = [frac(d) for d in flag_densities(q, n, j)]
    out["flag_densities"] = flags

    # Claim (ii) left bound at (2,3,3,2).
    mu = flag_densities(2, 3, 3)
    z = 1 / mu[2] - 1
    out["claim_ii_232_left_bound"] = frac(1 / (1 + z / 4))
    out["claim_ii_232_mu1"] = frac(mu[1])

    # Dual of Q_3 in F_2^3: members are perps of non-members.
    field, by_dim = all_subspaces(2, 3)
    v2 = span(field, 3, [(1, 0, 0), (0, 1, 0)])
    q3 = [a for k in range(4) for a in by_dim[k] if a <= v2]
    allsub = [a for k in range(4) for a in by_dim[k]]
    dual = [perp(field, 3, a) for a in allsub if a not in q3]
    out["dual_q3_densities"] = [frac(Fraction(sum(1 for a in dual if dim_of(field, a) == k),
                                              qbinom(2, 3, k))) for k in range(4)]

    # Grassmann expansion values.
    field, by_dim = all_subspaces(2, 3)
    lines = sorted(by_dim[1], key=sorted)
    s = lines[:3]
    boundary = sum(1 for a in s for b in lines if b not in s)
    out["phi_j231_size3"] = frac(Fraction(boundary, 6 * 3))
    out["eml_j231_size3"] = [frac(Fraction(5, 6) * Fraction(4, 7)), frac(Fraction(7, 6) * Fraction(4, 7))]
    out["eml_j242_singleton_lower"] = frac((1 - Fraction(3, 18)) * Fraction(34, 35))
    out["lemma_lower_j242_singleton"] = frac(Fraction(qint(2, 4), 2 * qint(2, 2) * qint(2, 2)) * Fraction(34, 35))
    out["lemma_upper_j242_singleton"] = frac(Fraction(qint(2, 3), 2 * qint(2, 2)) * (1 - Fraction(1, 35) / Fraction(3, 15)))

    # Sharp threshold step counts.
    out["steps"] = {
        "2,1/3": math.ceil(2 * math.log(2, 2)),
        "3,1/10": math.ceil(2 * math.log(9, 3) - 1e-12),
        "2,1/4": math.ceil(2 * math.log(3, 2)),
        "2,1/10": math.ceil(2 * math.log(9, 2)),
    }

    # Interpolation example at (2,4,2,x=3).
    out["qbt_interp_2_4_2_3"] = [(7 / 15) ** 2, 7 / 35]

    print(json.dumps(out, indent=1, default=str))


if __name__ == "__main__":
    main()
