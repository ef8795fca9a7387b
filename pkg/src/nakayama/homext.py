"""Hom and Ext dimensions between serial modules, grade and depth.

The counting formulas are checked against an oracle that builds explicit
representations over the rationals and solves the intertwiner equations.
"""

from __future__ import annotations

from dataclasses import dataclass

import sympy

from .algebra import Algebra
from .errors import ContradictionReport
from .homdim import dimension_profile
from .serial import (
    Module,
    MaybeModule,
    injdim,
    is_projective,
    is_torsionless,
    omega_k,
    proj,
    proj_cover,
    simple,
    syzygy,
    tau,
    top,
)

ORACLE_CAP = 16


class OracleCapExceeded(ValueError):
    pass


class WitnessFailure(ContradictionReport):
    pass


@dataclass(frozen=True)
class HomBasis:
    source: Module
    target: Module
    image_lengths: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.image_lengths)


def hom_basis(A: Algebra, U: Module, V: Module) -> HomBasis:
    """Each admissible length l names the map with image (soc V, l)."""
    r = top(A, U) - V.socle + 1
    m = min(U.length, V.length)
    if A.cyclic:
        lengths = tuple(ell for ell in range(1, m + 1) if (ell - r) % A.n == 0)
    else:
        lengths = (r,) if 1 <= r <= m else ()
    return HomBasis(U, V, lengths)


def hom_dim(A: Algebra, U: MaybeModule, V: MaybeModule) -> int:
    if U is None or V is None:
        return 0
    return hom_basis(A, U, V).dim


def ext_dim(A: Algebra, U: Module, V: Module, d: int) -> int:
    if d == 0:
        return hom_dim(A, U, V)
    X = omega_k(A, U, d - 1)
    if X is None or is_projective(A, X):
        return 0
    return hom_dim(A, syzygy(A, X), V) - hom_dim(A, proj_cover(A, X), V) + hom_dim(A, X, V)


def _ext_into_regular(A: Algebra, S: Module, d: int) -> int:
    return sum(ext_dim(A, S, proj(A, v), d) for v in A.vertices)


def grade(A: Algebra, v: int) -> int:
    S = simple(A, v)
    if is_torsionless(A, S):
        return 0
    cap = dimension_profile(A, v).delooping
    for d in range(1, cap + 1):
        if _ext_into_regular(A, S, d):
            return d
    raise ContradictionReport("grade S <= del S", {"simple": v, "del": cap}, A)


def depth(A: Algebra) -> int:
    return max(grade(A, v) for v in A.vertices)


def grade_witness(A: Algebra, v: int) -> dict:
    """N = tau Omega^(d-1) S has injective dimension d and Ext^d(S, N) != 0."""
    d = grade(A, v)
    if d < 1:
        raise ValueError(f"S_{v} has grade 0; no witness")
    S = simple(A, v)
    N = tau(A, omega_k(A, S, d - 1))
    id_N = injdim(A, N)
    if id_N != d or ext_dim(A, S, N, d) < 1:
        raise WitnessFailure("grade witness", {"simple": v, "N": N, "id": id_N}, A)
    return {"N": N, "id_N": id_N}


# ---------------------------------------------------------------- oracle


def _basis_vertices(A: Algebra, M: Module) -> list[int]:
    # basis vector j sits at vertex soc + j; arrows lower j by one
    return [A.wrap(M.socle + j) for j in range(M.length)]


def _hom_system(A: Algebra, U: Module, V: Module):
    for M in (U, V):
        if M.length > ORACLE_CAP:
            raise OracleCapExceeded(f"module {M} is longer than the oracle cap {ORACLE_CAP}")
    bu, bv = _basis_vertices(A, U), _basis_vertices(A, V)
    unknowns = [(a, b) for a in range(len(bv)) for b in range(len(bu)) if bv[a] == bu[b]]
    index = {x: k for k, x in enumerate(unknowns)}
    rows = []
    for b, vb in enumerate(bu):
        if not A.cyclic and vb == 1:
            continue  # no arrow leaves vertex 1 of the linear quiver
        for a2, va2 in enumerate(bv):
            if va2 != A.wrap(vb - 1):
                continue
            # (f alpha_U - alpha_V f)[a2, b] = f[a2, b-1] - f[a2+1, b]
            row = [0] * len(unknowns)
            if b >= 1:
                row[index[(a2, b - 1)]] += 1
            if a2 + 1 < len(bv):
                row[index[(a2 + 1, b)]] -= 1
            if any(row):
                rows.append(row)
    return unknowns, sympy.Matrix(rows) if rows else sympy.zeros(0, len(unknowns))


def oracle_hom_dim(A: Algebra, U: Module, V: Module) -> int:
    unknowns, M = _hom_system(A, U, V)
    if not unknowns:
        return 0
    return len(unknowns) - (M.rank() if M.rows else 0)


def _hom_basis_vectors(A: Algebra, U: Module, V: Module):
    unknowns, M = _hom_system(A, U, V)
    if not unknowns:
        return unknowns, []
    if not M.rows:
        return unknowns, [sympy.eye(len(unknowns)).col(k) for k in range(len(unknowns))]
    return unknowns, M.nullspace()


def oracle_ext1(A: Algebra, U: Module, V: Module) -> int:
    """dim Hom(Omega U, V) minus the rank of restriction from Hom(P(top U), V)."""
    K = syzygy(A, U)
    if K is None:
        return 0
    P = proj_cover(A, U)
    target = oracle_hom_dim(A, K, V)
    unknowns, basis = _hom_basis_vectors(A, P, V)
    # K is the submodule of P spanned by its first |K| basis vectors
    kept = [k for k, (a, b) in enumerate(unknowns) if b < K.length]
    if not basis or not kept:
        return target
    restricted = sympy.Matrix.hstack(*[vec.extract(kept, [0]) for vec in basis])
    return target - restricted.rank()
