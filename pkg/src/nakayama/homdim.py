"""The psi/gamma calculus, per-simple dimension profiles and finitistic data."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import networkx as nx

from .algebra import Algebra
from .errors import ContradictionReport
from .serial import (
    INF,
    Module,
    all_modules,
    cosyzygy,
    inj,
    injdim,
    is_injective,
    is_projective,
    omega_k,
    pd,
    proj,
    sigma_k,
    simple,
    syzygy,
)


def psi(A: Algebra, v: int) -> Optional[int]:
    """tau^- top I(S_v), or None when top I(S_v) is injective."""
    t = A.wrap(v + A.inj(v) - 1)
    if A.inj(t) == 1:
        return None
    return A.wrap(t + 1)


def gamma(A: Algebra, v: int) -> Optional[int]:
    """tau soc P(S_v), or None when soc P(S_v) is projective."""
    s = A.proj_socle[A.wrap(v) - 1]
    if A.c(s) == 1:
        return None
    return A.wrap(s - 1)


def phi(A: Algebra, v: int) -> int:
    return A.wrap(v + A.inj(v) - 1)


def iterate(f, A: Algebra, v: Optional[int], t: int) -> Optional[int]:
    for _ in range(t):
        if v is None:
            return None
        v = f(A, v)
    return v


def is_odd(x) -> bool:
    return x != INF and x >= 0 and x % 2 == 1


def is_even(x) -> bool:
    return x != INF and x >= 0 and x % 2 == 0


@dataclass(frozen=True)
class FunctionQuiver:
    kind: str
    successor: dict
    components: tuple
    cyclic_vertices: frozenset
    depth: dict  # the a(S) (resp. a'(S)) values

    def component_sizes(self) -> list[int]:
        return sorted(len(c) for c in self.components)

    def image(self, t: int = 1) -> set[int]:
        out = set(self.successor)
        for _ in range(t):
            out = {self.successor[v] for v in out if self.successor[v] is not None}
        return out


def function_quiver(A: Algebra, kind: str) -> FunctionQuiver:
    key = ("quiver", kind)
    if key in A._memo:
        return A._memo[key]
    f = {"psi": psi, "gamma": gamma}[kind]
    succ = {v: f(A, v) for v in A.vertices}
    G = nx.DiGraph()
    G.add_nodes_from(A.vertices)
    G.add_edges_from((v, w) for v, w in succ.items() if w is not None)
    cyc = frozenset(v for c in nx.simple_cycles(G) for v in c)
    comps = tuple(sorted(tuple(sorted(c)) for c in nx.weakly_connected_components(G)))
    preimages = {v: [u for u in A.vertices if succ[u] == v] for v in A.vertices}
    depth = {v: (INF if v in cyc else None) for v in A.vertices}
    for v in A.vertices:
        _height(v, preimages, depth)
    Q = FunctionQuiver(kind, succ, comps, cyc, depth)
    A._memo[key] = Q
    return Q


def _height(v, preimages, depth):
    # vertices on the longest path ending at v; preimages of acyclic vertices are acyclic
    if depth[v] is None:
        depth[v] = 1 + max((_height(u, preimages, depth) for u in preimages[v]), default=0)
    return depth[v]


def a_value(A: Algebra, kind: str = "psi") -> int:
    """a(A): largest finite depth in the quiver, 0 when every simple is cyclic."""
    Q = function_quiver(A, kind)
    return max((d for d in Q.depth.values() if d != INF), default=0)


# ---------------------------------------------------------------- delooping


def _syzygy_layers(A: Algebra, step, key: str) -> list[frozenset]:
    """layers[k] = nonzero k-th (co)syzygies of indecomposables, until stable."""
    if key in A._memo:
        return A._memo[key]
    layers = [frozenset(all_modules(A))]
    while True:
        nxt = frozenset(Y for Y in (step(A, X) for X in layers[-1]) if Y is not None)
        if nxt == layers[-1]:
            break
        layers.append(nxt)
    A._memo[key] = layers
    return layers


def _layer(layers, k):
    return layers[min(k, len(layers) - 1)]


def _level(A: Algebra, M: Module, step, done, key: str, cap=None):
    layers = _syzygy_layers(A, step, key)
    bound = cap if cap is not None else len(layers) + len(all_modules(A)) + 1
    X = M
    for d in range(bound + 1):
        if X is None or done(A, X) or X in _layer(layers, d + 1):
            return d
        X = step(A, X)
    return None


def delooping_level(A: Algebra, M: Module):
    """del M; INF if no level exists."""
    d = _level(A, M, syzygy, is_projective, "syz_layers")
    return INF if d is None else d


def desuspending_level(A: Algebra, M: Module):
    d = _level(A, M, cosyzygy, is_injective, "cosyz_layers")
    return INF if d is None else d


def delooping(A: Algebra, v: int) -> int:
    e = embedding_pd(A, v)
    d = _level(A, simple(A, v), syzygy, is_projective, "syz_layers", cap=e)
    if d is None:
        raise ContradictionReport("del S <= e(S)", {"simple": v, "e": e}, A)
    return d


def desuspending(A: Algebra, v: int) -> int:
    e = embedding_id(A, v)
    d = _level(A, simple(A, v), cosyzygy, is_injective, "cosyz_layers", cap=e)
    if d is None:
        raise ContradictionReport("des S <= e*(S)", {"simple": v, "e*": e}, A)
    return d


# ---------------------------------------------------------------- profiles


def embedding_pd(A: Algebra, v: int):
    return min(pd(A, simple(A, v)), pd(A, inj(A, v)))


def embedding_id(A: Algebra, v: int):
    return min(injdim(A, simple(A, v)), injdim(A, proj(A, v)))


def f_value(p, q):
    """f from the pair (pd S, pd IS); dually f* from (id S, id PS)."""
    if is_odd(p) and is_even(q):
        return 0
    if not is_even(q):
        return p
    return q


@dataclass(frozen=True)
class SimpleProfile:
    vertex: int
    pd_S: object
    id_S: object
    pd_IS: object
    id_PS: object
    e: int
    e_star: int
    f: object
    f_star: object
    g: object
    a: object
    a_prime: object
    delooping: int
    desuspending: int
    psi_cyclic: bool
    gamma_cyclic: bool


def has_infinite_gldim(A: Algebra) -> bool:
    return any(pd(A, simple(A, v)) == INF for v in A.vertices)


def dimension_profile(A: Algebra, v: int) -> SimpleProfile:
    key = ("profile", v)
    if key in A._memo:
        return A._memo[key]
    S = simple(A, v)
    p, q = pd(A, S), pd(A, inj(A, v))
    i, j = injdim(A, S), injdim(A, proj(A, v))
    if has_infinite_gldim(A):
        if p != INF and q != INF:
            g = 0
        elif q == INF:
            g = p
        else:
            g = q
    else:
        g = 0
    Qpsi, Qgamma = function_quiver(A, "psi"), function_quiver(A, "gamma")
    prof = SimpleProfile(
        vertex=v,
        pd_S=p,
        id_S=i,
        pd_IS=q,
        id_PS=j,
        e=min(p, q),
        e_star=min(i, j),
        f=f_value(p, q),
        f_star=f_value(i, j),
        g=g,
        a=Qpsi.depth[v],
        a_prime=Qgamma.depth[v],
        delooping=delooping(A, v),
        desuspending=desuspending(A, v),
        psi_cyclic=v in Qpsi.cyclic_vertices,
        gamma_cyclic=v in Qgamma.cyclic_vertices,
    )
    A._memo[key] = prof
    return prof


def profiles(A: Algebra) -> list[SimpleProfile]:
    return [dimension_profile(A, v) for v in A.vertices]


@dataclass(frozen=True)
class AlgebraSummary:
    finpro: object
    fininj: object
    del_A: object
    des_A: object
    gldim: object
    a_A: int
    c_psi: int
    c_gamma: int
    gorenstein: bool
    selfinjective: bool


def finitistic_summary(A: Algebra) -> AlgebraSummary:
    if "summary" in A._memo:
        return A._memo["summary"]
    rows = profiles(A)
    summary = AlgebraSummary(
        finpro=max(r.e for r in rows),
        fininj=max(r.e_star for r in rows),
        del_A=max(r.delooping for r in rows),
        des_A=max(r.desuspending for r in rows),
        gldim=max(r.pd_S for r in rows),
        a_A=a_value(A, "psi"),
        c_psi=len(function_quiver(A, "psi").cyclic_vertices),
        c_gamma=len(function_quiver(A, "gamma").cyclic_vertices),
        gorenstein=all(injdim(A, proj(A, v)) != INF and pd(A, inj(A, v)) != INF for v in A.vertices),
        selfinjective=all(is_injective(A, proj(A, v)) for v in A.vertices),
    )
    values = (summary.finpro, summary.fininj, summary.del_A, summary.des_A)
    if len(set(values)) != 1:
        raise ContradictionReport("finpro = fininj = del A = des A", values, A)
    A._memo["summary"] = summary
    return summary


def covering_lift_check(A: Algebra, lo: int = -20, hi: int = 20) -> dict:
    """Monotonicity of the lifted psi, gamma on the integers and psi~gamma~ <= id <= gamma~psi~."""
    if not A.cyclic:
        raise ValueError("covering lifts are defined for cyclic algebras")

    def psi_t(i):
        return i + A.inj(i)

    def gamma_t(i):
        return i - A.c(i)

    xs = range(lo, hi + 1)
    for i in xs:
        if i < hi and not (psi_t(i) <= psi_t(i + 1) and gamma_t(i) <= gamma_t(i + 1)):
            raise ContradictionReport("covering lifts monotone", i, A)
        if not psi_t(gamma_t(i)) <= i <= gamma_t(psi_t(i)):
            raise ContradictionReport("psi~gamma~(i) <= i <= gamma~psi~(i)", i, A)
    return {"range": (lo, hi), "psi": [psi_t(i) for i in xs], "gamma": [gamma_t(i) for i in xs]}
