"""The homological permutation, its ties, and the linear-algebra/Dyck-path dictionary."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .algebra import LINEAR, AdmissibilityError, Algebra, enumerate_algebras, validate
from .errors import ContradictionReport
from .homdim import dimension_profile, gamma, iterate, phi
from .serial import (
    Module,
    inj,
    inj_env,
    is_injective,
    is_projective,
    omega_k,
    proj,
    proj_cover,
    sigma_k,
    simple,
    top,
)


class MalformedPath(ValueError):
    pass


class NotRealizable(ValueError):
    pass


def ns(A: Algebra, v: int) -> Module:
    e = dimension_profile(A, v).e
    return simple(A, v) if e % 2 == 1 else inj(A, v)


def ns_star(A: Algebra, v: int) -> Module:
    e = dimension_profile(A, v).e_star
    return simple(A, v) if e % 2 == 1 else proj(A, v)


def h(A: Algebra, v: int) -> int:
    e = dimension_profile(A, v).e
    X = omega_k(A, ns(A, v), e)
    if X is None or not is_projective(A, X):
        raise ContradictionReport("Omega^e(S) NS is a nonzero projective", {"simple": v, "module": X}, A)
    return top(A, X)


def h_star(A: Algebra, v: int) -> int:
    e = dimension_profile(A, v).e_star
    X = sigma_k(A, ns_star(A, v), e)
    if X is None or not is_injective(A, X):
        raise ContradictionReport("Sigma^e*(S) N*S is a nonzero injective", {"simple": v, "module": X}, A)
    return X.socle


def h_closed_form(A: Algebra, v: int) -> int:
    """Closed form: gamma^t phi for e = 2t, gamma^t tau for e = 2t+1."""
    e = dimension_profile(A, v).e
    t, odd = divmod(e, 2)
    start = A.wrap(v - 1) if odd else phi(A, v)
    w = iterate(gamma, A, start, t)
    if w is None:
        raise ContradictionReport("closed form for h is defined", {"simple": v}, A)
    return w


@dataclass(frozen=True)
class HomPermutation:
    mapping: tuple[int, ...]
    inverse: tuple[int, ...]
    z: tuple[int, ...]

    def __call__(self, v: int) -> int:
        return self.mapping[v - 1]

    def cycles(self) -> list[tuple[int, ...]]:
        return cycles(self.mapping)

    def __str__(self):
        return cycle_notation(self.mapping)


def permutation(A: Algebra) -> HomPermutation:
    if "perm" in A._memo:
        return A._memo["perm"]
    hs = tuple(h(A, v) for v in A.vertices)
    hstar = tuple(h_star(A, v) for v in A.vertices)
    zs = tuple(dimension_profile(A, v).e for v in A.vertices)
    if sorted(hs) != list(A.vertices):
        raise ContradictionReport("h is a bijection", hs, A)
    for v in A.vertices:
        w = hs[v - 1]
        if hstar[w - 1] != v or hs[hstar[v - 1] - 1] != v:
            raise ContradictionReport("h* is inverse to h", {"simple": v, "h": hs, "h*": hstar}, A)
        if dimension_profile(A, w).e_star != zs[v - 1]:
            raise ContradictionReport("e*(h(S)) = e(S)", {"simple": v}, A)
    P = HomPermutation(hs, hstar, zs)
    A._memo["perm"] = P
    return P


def cycles(mapping: Sequence[int]) -> list[tuple[int, ...]]:
    seen, out = set(), []
    for start in range(1, len(mapping) + 1):
        if start in seen:
            continue
        cyc, v = [], start
        while v not in seen:
            seen.add(v)
            cyc.append(v)
            v = mapping[v - 1]
        out.append(tuple(cyc))
    return out


def cycle_notation(mapping: Sequence[int]) -> str:
    sep = "" if len(mapping) < 10 else ","
    return "".join("(" + sep.join(map(str, c)) + ")" for c in cycles(mapping))


def parse_cycles(text: str, n: int) -> tuple[int, ...]:
    """Read "(143)(2)" or "(1,3,5)(2,4)"; unmentioned points are fixed."""
    mapping = list(range(1, n + 1))
    for body in re.findall(r"\(([^()]*)\)", text):
        pts = [int(x) for x in re.split(r"[,\s]+", body.strip())] if ("," in body or " " in body.strip()) else [int(x) for x in body]
        for a, b in zip(pts, pts[1:] + pts[:1]):
            mapping[a - 1] = b
    if sorted(mapping) != list(range(1, n + 1)):
        raise ValueError(f"{text!r} is not a permutation of 1..{n}")
    return tuple(mapping)


# ---------------------------------------------------------------- ties


@dataclass(frozen=True)
class Tie:
    T: int
    S: int
    z: int
    parity: str
    proj_resolution: tuple[Module, ...]
    proj_terminal: Optional[Module]
    inj_coresolution: tuple[Module, ...]
    inj_terminal: Optional[Module]
    peak: Optional[Module] = None


def _resolution(A, M, z):
    terms = []
    for _ in range(z):
        terms.append(proj_cover(A, M))
        M = omega_k(A, M, 1)
    return tuple(terms), M


def _coresolution(A, M, z):
    terms = []
    for _ in range(z):
        terms.append(inj_env(A, M))
        M = sigma_k(A, M, 1)
    return tuple(terms), M


def tie(A: Algebra, T: int) -> Tie:
    S = h(A, T)
    z = dimension_profile(A, T).e
    IT, PS = inj(A, T), proj(A, S)
    if z % 2 == 0:
        res, r_end = _resolution(A, IT, z)
        cores, c_end = _coresolution(A, PS, z)
    else:
        res, r_end = _resolution(A, simple(A, T), z)
        cores, c_end = _coresolution(A, simple(A, S), z)
    if r_end != PS or c_end != IT:
        raise ContradictionReport("tie terminates at PS and IT", {"T": T, "S": S, "z": z}, A)
    return Tie(
        T=T,
        S=S,
        z=z,
        parity="even" if z % 2 == 0 else "odd",
        proj_resolution=res,
        proj_terminal=r_end,
        inj_coresolution=cores,
        inj_terminal=c_end,
        peak=IT if z == 0 else None,
    )


def ties(A: Algebra) -> list[Tie]:
    return [tie(A, T) for T in A.vertices]


# ---------------------------------------------------------------- Dyck paths


@dataclass(frozen=True)
class DyckPath:
    word: str

    def __post_init__(self):
        height = 0
        for k, ch in enumerate(self.word):
            if ch not in "UD":
                raise MalformedPath(f"unexpected letter {ch!r} at position {k}")
            height += 1 if ch == "U" else -1
            if height < 0:
                raise MalformedPath(f"path drops below zero at position {k}")
        if height != 0:
            raise MalformedPath("path is not balanced")

    def __str__(self):
        return self.word


def kupisch_to_dyck(A: Algebra) -> DyckPath:
    """One U per vertex 2..n followed by c_i + 1 - c_{i+1} D's (c_n - 1 after the last)."""
    if A.kind != LINEAR:
        raise ValueError("Dyck paths encode linear algebras")
    c = A.kupisch
    n = len(c)
    parts = []
    for i in range(1, n):
        drop = c[i] + 1 - c[i + 1] if i + 1 < n else c[i] - 1
        parts.append("U" + "D" * drop)
    return DyckPath("".join(parts))


def dyck_to_kupisch(path) -> Algebra:
    word = str(DyckPath(str(path)))
    if not word:
        return validate((1,), LINEAR)
    runs = re.findall(r"U(D*)", word)
    c = [1, 2]
    for d in runs[:-1]:
        c.append(c[-1] + 1 - len(d))
    return validate(tuple(c), LINEAR)


# ---------------------------------------------------------------- linear families


def enumerate_linear_with_stats(n: int) -> list[tuple[Algebra, HomPermutation]]:
    rows = []
    seen: dict = {}
    for A in enumerate_algebras(n, n, LINEAR):
        P = permutation(A)
        for x in A.vertices:
            e, hx = P.z[x - 1], P(x)
            if n >= 2 and hx == x:
                raise ContradictionReport("linear h is fixed-point free", x, A)
            if e == 0 and n >= 2 and not hx > x:
                raise ContradictionReport("e(x) = 0 implies h(x) > x", x, A)
            if e > 0 and not hx < x:
                raise ContradictionReport("e(x) > 0 implies h(x) < x", x, A)
        if P.mapping in seen:
            raise ContradictionReport("A -> h_A is injective on linear algebras", (seen[P.mapping], A), A)
        seen[P.mapping] = A
        rows.append((A, P))
    return rows


def reconstruct_linear_from_h(perm, n: int) -> Algebra:
    """Rebuild a linear algebra from its permutation via the peaks [x, h(x)], h(x) > x."""
    mapping = _as_mapping(perm, n)
    if n == 1:
        peaks = [(1, 1)]
    else:
        peaks = [(x, y) for x, y in mapping.items() if y > x]
    c = []
    for i in range(1, n + 1):
        cover = [i - x + 1 for x, y in peaks if x <= i <= y]
        if not cover:
            raise NotRealizable(f"vertex {i} lies under no peak")
        c.append(max(cover))
    try:
        A = validate(tuple(c), LINEAR)
    except AdmissibilityError as exc:
        raise NotRealizable(str(exc)) from None
    if tuple(permutation(A).mapping) != tuple(mapping[v] for v in range(1, n + 1)):
        raise NotRealizable("reconstructed algebra has a different permutation")
    return A


def _as_mapping(perm, n: int) -> Mapping[int, int]:
    if isinstance(perm, str):
        perm = parse_cycles(perm, n)
    if isinstance(perm, HomPermutation):
        perm = perm.mapping
    if isinstance(perm, Mapping):
        return dict(perm)
    return {v: perm[v - 1] for v in range(1, n + 1)}
