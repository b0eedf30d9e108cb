#!/usr/bin/env python3
# Copyright 2026 The modpoly Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#   http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Reference tables for the classical modular polynomial from q-expansions.

Phi_l(X, j(q)) is the product of (X - j(zeta^k q^(1/l))) over k and
(X - j(q^l)). Power sums of the roots are read off the q-expansion of j,
the elementary symmetric functions follow from Newton's identities, and each
of them is rewritten as a polynomial in j by peeling off poles. All of this
runs modulo word primes; the integer table comes from CRT. The method shares
no code or mathematics with the isogeny pipeline in the library.

Usage: gen_fixtures.py OUTDIR L [L ...]
"""

import hashlib
import math
import sys
from datetime import date

import numpy as np
import sympy


def mulmod(a, b, p, n):
    """Product of two power series mod p truncated to n terms."""
    return np.convolve(a[:n], b[:n])[:n] % p


def series_inv(a, p, n):
    g = np.array([pow(int(a[0]), -1, p)], dtype=np.int64)
    k = 1
    while k < n:
        k = min(2 * k, n)
        t = mulmod(a, g, p, k)
        t = (-t) % p
        t[0] = (t[0] + 2) % p
        g = mulmod(g, t, p, k)
    return g


def j_series(p, n):
    """J with j(q) = q^-1 J(q), first n coefficients mod p."""
    sig3 = np.zeros(n, dtype=np.int64)
    for d in range(1, n):
        sig3[d::d] = (sig3[d::d] + pow(d, 3, p)) % p
    e4 = (240 * sig3) % p
    e4[0] = 1
    eta = np.zeros(n, dtype=np.int64)
    k = 0
    while True:
        done = True
        for kk in (k, -k):
            e = kk * (3 * kk - 1) // 2
            if e < n:
                eta[e] = (1 if kk % 2 == 0 else p - 1)
                done = False
        if done and k > 0:
            break
        k += 1
    e2 = mulmod(eta, eta, p, n)
    e4_ = mulmod(e2, e2, p, n)
    e8 = mulmod(e4_, e4_, p, n)
    e16 = mulmod(e8, e8, p, n)
    d = mulmod(e16, e8, p, n)
    num = mulmod(mulmod(e4, e4, p, n), e4, p, n)
    return mulmod(num, series_inv(d, p, n), p, n)


class Laurent:
    """Series sum c[i] q^(v+i), truncated above exponent top."""

    def __init__(self, v, c):
        self.v = v
        self.c = c

    def coeff(self, e):
        i = e - self.v
        return int(self.c[i]) if 0 <= i < len(self.c) else 0


def lmul(a, b, p, top):
    v = a.v + b.v
    n = top - v + 1
    if n <= 0:
        return Laurent(v, np.zeros(0, dtype=np.int64))
    return Laurent(v, np.convolve(a.c[:n], b.c[:n])[:n] % p)


def ladd(a, b, p, top, sb=1):
    v = min(a.v, b.v)
    out = np.zeros(top - v + 1, dtype=np.int64)
    for s, x in ((1, a), (sb, b)):
        n = min(len(x.c), top - x.v + 1)
        if n > 0:
            out[x.v - v:x.v - v + n] += s * x.c[:n]
    return Laurent(v, out % p)


def phi_mod_p(l, p):
    """Coefficient grid a[i][k] of Phi_l(X, Y) mod p, X^i Y^k."""
    check = l * (l + 1) + l + 2
    # Newton's identities lose l*t terms of accuracy against the pole of s_t
    top = check + l * (l + 2)
    nj = l * top + l + 4
    J = j_series(p, nj)
    # powers of J up to l+1
    Jp = [np.array([1], dtype=np.int64)]
    for m in range(1, l + 2):
        Jp.append(mulmod(Jp[-1], J, p, nj))
    s = [None]
    for m in range(1, l + 2):
        # l * sum over e = 0 mod l of coeff(j^m, e) q^(e/l)
        lo = -((m + l - 1) // l)
        dec = np.zeros(top - lo + 1, dtype=np.int64)
        for e in range(lo, top + 1):
            idx = e * l + m
            if 0 <= idx < nj:
                dec[e - lo] = Jp[m][idx]
        dec = (l * dec) % p
        # j(q^l)^m
        up = np.zeros(top + l * m + 1, dtype=np.int64)
        for i in range(0, (top + l * m) // l + 1):
            if i < len(Jp[m]):
                up[i * l] = Jp[m][i]
        s.append(ladd(Laurent(lo, dec), Laurent(-l * m, up), p, top))
    e = [Laurent(0, np.array([1] + [0] * top, dtype=np.int64))]
    for i in range(1, l + 2):
        acc = Laurent(0, np.zeros(top + 1, dtype=np.int64))
        for t in range(1, i + 1):
            term = lmul(e[i - t], s[t], p, top)
            acc = ladd(acc, term, p, top, 1 if t % 2 == 1 else -1)
        inv = pow(i, -1, p)
        e.append(Laurent(acc.v, (acc.c * inv) % p))
    jl = [Laurent(0, np.array([1] + [0] * top, dtype=np.int64))]
    jq = Laurent(-1, J[:top + 2].copy())
    for d in range(1, l + 2):
        jl.append(lmul(jl[-1], jq, p, top))
    grid = [[0] * (l + 2) for _ in range(l + 2)]
    for i in range(0, l + 2):
        rem = e[i]
        for ex in range(rem.v, -(l + 1)):
            if rem.coeff(ex) != 0:
                raise RuntimeError("pole of order > l+1")
        for d in range(l + 1, -1, -1):
            c = rem.coeff(-d)
            if c:
                rem = ladd(rem, Laurent(jl[d].v, (jl[d].c * c) % p), p, top, -1)
            sign = 1 if i % 2 == 0 else -1
            grid[l + 1 - i][d] = (sign * c) % p
        if any(rem.coeff(ex) for ex in range(rem.v, check + 1)):
            raise RuntimeError("remainder not zero, precision too low")
    return grid


def height_bound(l):
    return (6 * l * math.log(l) + 16 * l
            + min(2 * l, 14 * math.sqrt(l) * math.log(l)) + math.log(2))


def phi_integer(l):
    need = math.exp(height_bound(l)) * 4
    primes = []
    q = (1 << 20)
    modulus = 1
    grids = []
    while modulus < need or len(primes) < 3:
        q = sympy.prevprime(q)
        primes.append(q)
        grids.append(phi_mod_p(l, q))
        modulus *= q
    # extra primes to confirm the reconstruction is stable
    for _ in range(2):
        q = sympy.prevprime(q)
        primes.append(q)
        grids.append(phi_mod_p(l, q))

    def crt(ps, gs):
        n = l + 2
        out = [[0] * n for _ in range(n)]
        M = 1
        for pr in ps:
            M *= pr
        for a in range(n):
            for b in range(n):
                x = 0
                for pr, g in zip(ps, gs):
                    Mi = M // pr
                    x += g[a][b] * Mi * pow(Mi, -1, pr)
                x %= M
                if 2 * x > M:
                    x -= M
                out[a][b] = x
        return out

    full = crt(primes, grids)
    short = crt(primes[:-2], grids[:-2])
    if full != short:
        raise RuntimeError("CRT reconstruction unstable for l=%d" % l)
    return full


def flat(grid):
    lines = []
    n = len(grid)
    for i in range(n):
        for k in range(n):
            if grid[i][k] != 0:
                lines.append("%d %d %d" % (i, k, grid[i][k]))
    return "\n".join(lines) + "\n"


PHI2 = {(3, 0): 1, (0, 3): 1, (2, 2): -1, (2, 1): 1488, (1, 2): 1488,
        (2, 0): -162000, (0, 2): -162000, (1, 1): 40773375,
        (1, 0): 8748000000, (0, 1): 8748000000, (0, 0): -157464000000000}

PHI3 = {(4, 0): 1, (3, 3): -1, (3, 2): 2232, (3, 1): -1069956,
        (3, 0): 36864000, (2, 2): 2587918086, (2, 1): 8900222976000,
        (2, 0): 452984832000000, (1, 1): -770845966336000000,
        (1, 0): 1855425871872000000000}


def check_known(l, grid, table):
    for (a, b), c in table.items():
        if grid[a][b] != c or grid[b][a] != c:
            raise RuntimeError("mismatch with classical Phi_%d at %d %d" % (l, a, b))
    nz = sum(1 for r in grid for c in r if c)
    want = len(set(table) | {(b, a) for (a, b) in table})
    if nz != want:
        raise RuntimeError("unexpected extra terms in Phi_%d" % l)


def main():
    out = sys.argv[1]
    ells = [int(x) for x in sys.argv[2:]]
    check_known(2, phi_integer(2), PHI2)
    manifest = []
    for l in ells:
        g = phi_integer(l)
        if l == 3:
            check_known(3, g, PHI3)
        text = flat(g)
        path = "%s/phi_%d.txt" % (out, l)
        with open(path, "w", newline="\n") as f:
            f.write(text)
        digest = hashlib.sha256(text.encode()).hexdigest()
        manifest.append("%d %s q-expansion-crt %s" % (l, digest, date.today().isoformat()))
        print("l=%d terms=%d sha256=%s" % (l, text.count("\n"), digest))
    with open("%s/MANIFEST" % out, "w", newline="\n") as f:
        f.write("\n".join(manifest) + "\n")


if __name__ == "__main__":
    main()
