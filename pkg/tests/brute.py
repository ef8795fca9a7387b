"""Slow, independent reference computations used to derive and cross-check test values.

Modules are (top, length) pairs here, the opposite convention to the package,
and every quantity is computed from first principles: injective lengths by
scanning all quotients of projectives, resolutions step by step up to a fixed
horizon, Hom spaces from explicit per-vertex matrices.
"""

from __future__ import annotations

import itertools

import sympy


class Brute:
    def __init__(self, c, cyclic):
        self.c = tuple(c)
        self.n = len(c)
        self.cyclic = cyclic
        # a module is (top, length) with length <= c[top]; composition factors top, top-1, ...
        self.mods = []
        for t in range(1, self.n + 1):
            for ell in range(1, self.c[t - 1] + 1):
                if cyclic or t - ell + 1 >= 1:
                    self.mods.append((t, ell))
        self.horizon = len(self.mods) + 2

    def v(self, x):
        return (x - 1) % self.n + 1 if self.cyclic else x

    def factors(self, M):
        t, ell = M
        return [self.v(t - k) for k in range(ell)]

    def soc(self, M):
        return self.factors(M)[-1]

    def inj_len(self, s):
        return max(ell for (t, ell) in self.mods if self.soc((t, ell)) == s)

    def is_proj(self, M):
        return M[1] == self.c[M[0] - 1]

    def is_inj(self, M):
        return M[1] == self.inj_len(self.soc(M))

    def syz(self, M):
        t, ell = M
        k = self.c[t - 1] - ell
        return (self.v(t - ell), k) if k else None

    def cosyz(self, M):
        s = self.soc(M)
        L = self.inj_len(s)
        # injective envelope: the module with socle s and length L
        k = L - M[1]
        return (self.v(s + L - 1), k) if k else None

    def dim(self, M, step):
        d = 0
        while M is not None:
            if (step == self.syz and self.is_proj(M)) or (step == self.cosyz and self.is_inj(M)):
                return d
            M = step(M)
            d += 1
            if d > self.horizon:
                return float("inf")
        return 0

    def pd(self, M):
        return self.dim(M, self.syz)

    def injdim(self, M):
        return self.dim(M, self.cosyz)

    def simple(self, v):
        return (v, 1)

    def proj(self, v):
        return (v, self.c[v - 1])

    def inj(self, s):
        L = self.inj_len(s)
        return (self.v(s + L - 1), L)

    def torsionless(self, M):
        return any(self.soc(P) == self.soc(M) and P[1] >= M[1] for P in map(self.proj, range(1, self.n + 1)))

    def omega(self, M, k):
        for _ in range(k):
            if M is None:
                return None
            M = self.syz(M)
        return M

    def e(self, v):
        return min(self.pd(self.simple(v)), self.pd(self.inj(v)))

    def finpro(self):
        return max(d for d in map(self.pd, self.mods) if d != float("inf"))

    def fininj(self):
        return max(d for d in map(self.injdim, self.mods) if d != float("inf"))

    def gldim(self):
        return max(self.pd(self.simple(v)) for v in range(1, self.n + 1))

    def delooping(self, M, cap=None):
        """Smallest d with Omega^d M stably a summand of Omega^(d+1) of something."""
        cap = self.horizon if cap is None else cap
        for d in range(cap + 1):
            X = self.omega(M, d)
            if X is None or self.is_proj(X):
                return d
            if any(self.omega(N, d + 1) == X for N in self.mods):
                return d
        return float("inf")

    # ---- explicit representations

    def rep(self, M):
        """Basis vectors listed from socle (0) to top; the arrow sends vector j to j-1."""
        fs = list(reversed(self.factors(M)))
        return fs

    def hom(self, U, V):
        fu, fv = self.rep(U), self.rep(V)
        # unknown matrix entries f[a][b]: coefficient of V-vector a in f(U-vector b), same vertex
        unknowns = [(a, b) for a in range(len(fv)) for b in range(len(fu)) if fv[a] == fu[b]]
        if not unknowns:
            return 0
        idx = {x: k for k, x in enumerate(unknowns)}
        rows = []
        # commutation with the arrow: f(alpha u_b) = alpha f(u_b)
        for b in range(len(fu)):
            for a in range(len(fv)):
                row = [0] * len(unknowns)
                # coefficient of V-vector a in f(alpha u_b) where alpha u_b = u_{b-1}
                if b >= 1 and (a, b - 1) in idx:
                    row[idx[(a, b - 1)]] += 1
                # coefficient of V-vector a in alpha f(u_b) = sum f[a'][b] v_{a'-1}
                if (a + 1, b) in idx:
                    row[idx[(a + 1, b)]] -= 1
                if any(row):
                    rows.append(row)
        if not rows:
            return len(unknowns)
        return len(unknowns) - sympy.Matrix(rows).rank()

    def ext(self, U, V, d):
        if d == 0:
            return self.hom(U, V)
        X = self.omega(U, d - 1)
        if X is None or self.is_proj(X):
            return 0
        K = self.syz(X)
        P = (X[0], self.c[X[0] - 1])
        return (self.hom(K, V) if K else 0) - self.hom(P, V) + self.hom(X, V)

    def grade(self, v):
        S = self.simple(v)
        for d in range(self.horizon):
            if any(self.ext(S, self.proj(w), d) for w in range(1, self.n + 1)):
                return d
        return float("inf")


def admissible(c, cyclic):
    n = len(c)
    if cyclic:
        return all(x >= 2 for x in c) and all(c[i] <= c[i - 1] + 1 for i in range(n))
    return c[0] == 1 and all(2 <= c[i] <= min(c[i - 1] + 1, i + 1) for i in range(1, n))


def all_series(n, max_c, cyclic):
    lo = 2 if cyclic else 1
    for c in itertools.product(range(lo, max_c + 1), repeat=n):
        if admissible(c, cyclic):
            yield c


def rotation_classes(n, max_c):
    return {min(c[k:] + c[:k] for k in range(n)) for c in all_series(n, max_c, True)}


def dyck_words(m):
    for bits in itertools.product("UD", repeat=2 * m):
        h = 0
        for ch in bits:
            h += 1 if ch == "U" else -1
            if h < 0:
                break
        else:
            if h == 0:
                yield "".join(bits)
