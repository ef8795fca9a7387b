"""Simple-module classes, Delta-modules, the reduced algebra epsilon(A) and the mho operator."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .algebra import CYCLIC, LINEAR, AdmissibilityError, Algebra, canonical_rotation, validate
from .errors import ContradictionReport
from .homdim import gamma, psi
from .serial import (
    INF,
    Module,
    MaybeModule,
    all_modules,
    exists,
    inj,
    injdim,
    is_divisible,
    is_projective,
    is_torsionless,
    mod_socle,
    omega_k,
    pd,
    predicates,
    proj,
    proj_cover,
    rad,
    simple,
    syzygy,
    top,
)


class FiltrationError(ContradictionReport):
    pass


@dataclass(frozen=True)
class SimpleClasses:
    S_torsionless: frozenset
    T_id_ge2: frozenset
    U_pd_ge2: frozenset
    D_divisible: frozenset
    peaks: frozenset
    valleys: frozenset
    minimal_projectives: frozenset
    minimal_injectives: frozenset
    r: int

    def sizes(self) -> dict:
        return {
            name: len(getattr(self, name))
            for name in (
                "S_torsionless",
                "T_id_ge2",
                "U_pd_ge2",
                "peaks",
                "valleys",
                "minimal_projectives",
                "minimal_injectives",
            )
        }


def classify(A: Algebra, check: bool = True) -> SimpleClasses:
    if "classes" in A._memo:
        return A._memo["classes"]
    verts = list(A.vertices)
    preds = {M: predicates(A, M) for M in all_modules(A)}
    cls = SimpleClasses(
        S_torsionless=frozenset(A.torsionless_simples),
        T_id_ge2=frozenset(v for v in verts if injdim(A, simple(A, v)) >= 2),
        U_pd_ge2=frozenset(v for v in verts if pd(A, simple(A, v)) >= 2),
        D_divisible=frozenset(v for v in verts if is_divisible(A, simple(A, v))),
        peaks=frozenset(M for M, p in preds.items() if p.peak),
        valleys=frozenset(M for M, p in preds.items() if p.valley),
        minimal_projectives=frozenset(M for M, p in preds.items() if p.minimal_projective),
        minimal_injectives=frozenset(M for M, p in preds.items() if p.minimal_injective),
        r=len(A.torsionless_simples),
    )
    if check and A.cyclic:
        sizes = cls.sizes()
        if set(sizes.values()) != {cls.r}:
            raise ContradictionReport("all class cardinalities equal r", sizes, A)
        for v in verts:
            if (v in cls.S_torsionless) != (A.wrap(v - 1) in cls.T_id_ge2):
                raise ContradictionReport("S in S-class iff tau S in T-class", v, A)
        A._memo["classes"] = cls
        bijection_table(A)
    A._memo["classes"] = cls
    return cls


def bijection_table(A: Algebra) -> dict:
    """Each arrow of the canonical table as a mapping, checked to be a bijection."""
    cls = classify(A, check=False)
    T, S, U = sorted(cls.T_id_ge2), cls.S_torsionless, cls.U_pd_ge2
    deltas = {t: delta(A, t).module for t in T}
    delta_set = frozenset(deltas.values())
    arrows = {
        "tau^- : T -> S": ({t: A.wrap(t + 1) for t in T}, S),
        "soc Delta : T -> S": ({t: deltas[t].socle for t in T}, S),
        "psi : T -> U": ({t: psi(A, t) for t in T}, U),
        "gamma : U -> T": ({u: gamma(A, u) for u in sorted(U)}, frozenset(T)),
        "Omega : U -> valleys": ({u: syzygy(A, simple(A, u)) for u in sorted(U)}, cls.valleys),
        "Omega : valleys -> Delta": ({V: syzygy(A, V) for V in sorted(cls.valleys)}, delta_set),
        "P : U -> minimal projectives": ({u: proj(A, u) for u in sorted(U)}, cls.minimal_projectives),
        "rad : minimal projectives -> valleys": (
            {P: rad(A, P) for P in sorted(cls.minimal_projectives)},
            cls.valleys,
        ),
        "I : T -> minimal injectives": ({t: inj(A, t) for t in T}, cls.minimal_injectives),
        "quotient by socle : minimal injectives -> valleys": (
            {I: mod_socle(A, I) for I in sorted(cls.minimal_injectives)},
            cls.valleys,
        ),
        "I : S -> peaks": ({s: inj(A, s) for s in sorted(S)}, cls.peaks),
        "P : minimal injectives -> peaks": (
            {I: proj_cover(A, I) for I in sorted(cls.minimal_injectives)},
            cls.peaks,
        ),
    }
    for name, (mapping, target) in arrows.items():
        image = list(mapping.values())
        if len(set(image)) != len(image) or set(image) != set(target):
            raise ContradictionReport(f"bijection {name}", mapping, A)
    return {name: mapping for name, (mapping, _) in arrows.items()}


# ---------------------------------------------------------------- Delta modules


@dataclass(frozen=True)
class DeltaModule:
    T: int
    module: Module


def delta(A: Algebra, T: int) -> DeltaModule:
    key = ("delta", T)
    if key in A._memo:
        return A._memo[key]
    if injdim(A, simple(A, T)) < 2:
        raise ValueError(f"S_{T} does not have injective dimension at least 2")
    c = A.c(T)
    D = next(M for M in (Module(A.wrap(T - k + 1), k) for k in range(1, c + 1)) if is_torsionless(A, M))
    u = psi(A, T)
    if u is None or omega_k(A, simple(A, u), 2) != D:
        raise ContradictionReport("Delta T = Omega^2 psi T", {"T": T, "Delta": D, "psi": u}, A)
    out = DeltaModule(T, D)
    A._memo[key] = out
    return out


def delta_factors(A: Algebra, M: MaybeModule) -> Optional[list[int]]:
    """Tops of a Delta-filtration of M from the top down, or None if M has none."""
    cls = classify(A, check=False)
    tops = []
    while M is not None:
        t = top(A, M)
        if t not in cls.T_id_ge2:
            return None
        D = delta(A, t).module
        if D.length > M.length:
            return None
        tops.append(t)
        M = Module(M.socle, M.length - D.length) if M.length > D.length else None
    return tops


def check_delta_cover(A: Algebra) -> None:
    """Every simple is a composition factor of exactly one Delta T, once."""
    counts = {v: 0 for v in A.vertices}
    for t in sorted(classify(A, check=False).T_id_ge2):
        D = delta(A, t).module
        for k in range(D.length):
            counts[A.wrap(D.socle + k)] += 1
    if any(x != 1 for x in counts.values()):
        raise ContradictionReport("Delta modules cover each simple once", counts, A)


@dataclass(frozen=True)
class EpsilonAlgebra:
    components: tuple
    vertex_map: dict  # T -> (component index, vertex of that component)

    @property
    def n(self) -> int:
        return sum(C.n for C in self.components)


def epsilon_algebra(A: Algebra) -> EpsilonAlgebra:
    if "epsilon" in A._memo:
        return A._memo["epsilon"]
    T = sorted(classify(A, check=False).T_id_ge2)
    length, prev = {}, {}
    for t in T:
        tops = delta_factors(A, proj(A, t))
        if tops is None:
            raise FiltrationError("P(T) has a Delta-filtration", t, A)
        length[t] = len(tops)
        D = delta(A, t).module
        if is_projective(A, D):
            prev[t] = None
        else:
            p = A.wrap(D.socle - 1)
            if p not in T:
                raise FiltrationError("tau soc Delta T lies in T", t, A)
            prev[t] = p
    nxt = {}
    for t, p in prev.items():
        if p is not None:
            if p in nxt:
                raise FiltrationError("tau_F is injective", (p, nxt[p], t), A)
            nxt[p] = t
    orders, used = [], set()
    starts = [t for t in T if prev[t] is None]
    for s in starts + [t for t in T]:
        if s in used:
            continue
        chain, t = [], s
        while t is not None and t not in used:
            used.add(t)
            chain.append(t)
            t = nxt.get(t)
        orders.append((chain, prev[s] is None))
    comps, vmap = [], {}
    for idx, (chain, is_linear) in enumerate(orders):
        entries = [length[t] for t in chain]
        if not is_linear:
            shifts = [k for k in range(len(entries)) if tuple(entries[k:] + entries[:k]) == canonical_rotation(entries)]
            k = shifts[0]
            chain, entries = chain[k:] + chain[:k], entries[k:] + entries[:k]
        try:
            comps.append(validate(tuple(entries), LINEAR if is_linear else CYCLIC))
        except AdmissibilityError as exc:
            raise FiltrationError("epsilon component is admissible", (entries, str(exc)), A) from None
        for j, t in enumerate(chain, start=1):
            vmap[t] = (idx, j)
    out = EpsilonAlgebra(tuple(comps), vmap)
    A._memo["epsilon"] = out
    return out


def check_gamma_correspondence(A: Algebra) -> bool:
    """gamma of epsilon(A) matches gamma of A wherever the former is defined.

    Linear components leave gamma undefined at one end; those vertices are
    skipped. Returns False when nothing was compared.
    """
    E = epsilon_algebra(A)
    compared = False
    for t, (idx, j) in E.vertex_map.items():
        gj = gamma(E.components[idx], j)
        if gj is None:
            continue
        compared = True
        if E.vertex_map.get(gamma(A, t)) != (idx, gj):
            raise ContradictionReport("gamma_F(Delta T) = Delta(gamma T)", t, A)
    return compared


# ---------------------------------------------------------------- mho and reflexives


def mho(A: Algebra, M: MaybeModule) -> MaybeModule:
    """Cokernel of a minimal left approximation of M by projectives."""
    if M is None:
        return None
    t = M.socle + M.length - 1
    W = next(
        (Module(A.wrap(t - k + 1), k) for k in range(M.length, 0, -1) if is_torsionless(A, Module(A.wrap(t - k + 1), k))),
        None,
    )
    if W is None or is_projective(A, W):
        return None
    m = next(m for m in range(W.length, A.maxlen + 1) if exists(A, W.socle, m) and is_projective(A, Module(W.socle, m)))
    return Module(A.wrap(W.socle + W.length), m - W.length)


def is_reflexive(A: Algebra, M: Module) -> bool:
    return is_projective(A, M) or (is_torsionless(A, M) and is_torsionless(A, mho(A, M)))


@dataclass(frozen=True)
class ReflexiveChain:
    reduced_reflexive: frozenset
    second_syzygies: frozenset
    filtered: frozenset
    reflexive: frozenset
    proper: tuple[bool, bool, bool]


def reflexive_chain(A: Algebra) -> ReflexiveChain:
    if "chain" in A._memo:
        return A._memo["chain"]
    mods = all_modules(A)
    refl = frozenset(M for M in mods if is_reflexive(A, M))
    R0 = frozenset(M for M in refl if not is_projective(A, M))
    omega2 = frozenset(Y for Y in (omega_k(A, X, 2) for X in mods) if Y is not None)
    F = frozenset(M for M in mods if delta_factors(A, M) is not None)
    R = frozenset(M for M in mods if is_projective(A, M)) | omega2
    T = classify(A, check=False).T_id_ge2
    if not (R0 <= omega2 <= F <= R):
        raise ContradictionReport("R0 <= Omega^2 <= F <= R", None, A)
    if R != refl:
        raise ContradictionReport("reflexives are projectives plus second syzygies", sorted(R ^ refl), A)
    if F != frozenset(M for M in mods if is_torsionless(A, M) and top(A, M) in T):
        raise ContradictionReport("F is torsionless modules with top in T", None, A)
    chain = ReflexiveChain(R0, omega2, F, R, (R0 < omega2, omega2 < F, F < R))
    A._memo["chain"] = chain
    return chain


@dataclass(frozen=True)
class MhoScan:
    entries: tuple  # (t, module, torsionless)
    period: Optional[int]


def mho_omega_scan(A: Algebra, v: int, t_max: int) -> MhoScan:
    entries = []
    for t in range(t_max + 1):
        X = omega_k(A, simple(A, v), t)
        for _ in range(t):
            X = mho(A, X)
        entries.append((t, X, is_torsionless(A, X)))
    mods = [e[1] for e in entries]
    period = None
    half = t_max // 2
    for p in range(1, t_max - half + 1):
        if all(mods[t] == mods[t + p] for t in range(half, t_max - p + 1)):
            period = p
            break
    return MhoScan(tuple(entries), period)
