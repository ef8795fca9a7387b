"""Exhaustive searches for example algebras, and the suites behind ``nakayama verify``."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Optional

from .algebra import CYCLIC, LINEAR, Algebra, enumerate_algebras, serialize, validate
from .checks import check_theorems
from .epsilon import reflexive_chain
from .errors import ContradictionReport
from .homdim import finitistic_summary, function_quiver, is_even, is_odd, profiles
from .homext import ext_dim, hom_dim, oracle_ext1, oracle_hom_dim
from .perm import dyck_to_kupisch, kupisch_to_dyck, permutation, reconstruct_linear_from_h
from .serial import INF, all_modules, inj, omega_k, simple

# (pd S, pd IS) patterns that can occur
PD_PAIR_PATTERNS = {
    "pd S < pd IS, both odd": lambda p, q: is_odd(p) and is_odd(q) and p < q,
    "pd S = pd IS, both odd": lambda p, q: is_odd(p) and p == q,
    "pd S odd, pd IS infinite": lambda p, q: is_odd(p) and q == INF,
    "pd S < pd IS, pd S odd, pd IS even": lambda p, q: is_odd(p) and is_even(q) and p < q,
    "pd S > pd IS, pd S odd, pd IS even": lambda p, q: is_odd(p) and is_even(q) and p > q,
    "pd S infinite, pd IS even": lambda p, q: p == INF and is_even(q),
    "pd S > pd IS, both even": lambda p, q: is_even(p) and is_even(q) and p > q,
    "pd S = pd IS, both even": lambda p, q: is_even(p) and p == q,
}

REFLEXIVE_LABELS = [
    "reflexive-chain: R0 < Omega^2",
    "reflexive-chain: Omega^2 < F",
    "reflexive-chain: F < R",
]


def pattern_possible(p, q) -> bool:
    """Whether the cell (pd S, pd IS) = (p, q) is not excluded by the parity laws."""
    if p == INF and q == INF:
        return False
    if is_odd(q) and not (is_odd(p) and p <= q):
        return False
    if is_even(p) and not (is_even(q) and q <= p):
        return False
    return True


def search_space(n_max: int, c_max: int, kinds=(CYCLIC, LINEAR)) -> Iterator[Algebra]:
    for kind in kinds:
        for n in range(1, n_max + 1):
            yield from enumerate_algebras(n, c_max if kind == CYCLIC else min(c_max, n), kind)


@dataclass
class Witness:
    name: str
    algebras: tuple
    detail: object

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "algebras": [serialize(A) for A in self.algebras],
            "detail": self.detail,
        }


def _pairs(A):
    return [(p.vertex, p.pd_S, p.pd_IS) for p in profiles(A)]


def _rotation_key(A, succ):
    """The labelled functional graph up to rotation of the vertex labels."""
    n = A.n
    keys = []
    for k in range(n):
        keys.append(tuple((succ[A.wrap(v + k)] - 1 - k) % n if succ[A.wrap(v + k)] else -1 for v in A.vertices))
    return min(keys)


class WitnessSearch:
    """Finds the first algebra (or pair) in enumeration order for each named example."""

    def __init__(self, pattern: str = "all"):
        self.pattern = pattern
        self.found: dict[str, Optional[Witness]] = {name: None for name in self.targets()}
        self._psi_classes: dict = {}
        self._h_seen: dict = {}

    def targets(self) -> list[str]:
        groups = {
            "pd-pairs": [f"pd-pairs: {k}" for k in PD_PAIR_PATTERNS],
            "quivers": ["quivers: component sizes differ", "quivers: same psi-quiver, finpro 2 and 1"],
            "reflexive-chain": REFLEXIVE_LABELS,
            "permutation": ["permutation: cyclic h with a fixed point", "permutation: distinct cyclic algebras with equal h"],
            "syzygies": ["syzygies: even z = pd T = pd IT with different syzygies"],
            "f-multisets": ["f-multisets: f and f* have different multisets"],
        }
        if self.pattern == "all":
            return [t for g in groups.values() for t in g]
        if self.pattern not in groups:
            raise KeyError(f"unknown pattern group {self.pattern!r}; choose from {sorted(groups)} or 'all'")
        return groups[self.pattern]

    @property
    def done(self) -> bool:
        return all(w is not None for w in self.found.values())

    def _hit(self, name, algebras, detail):
        if name in self.found and self.found[name] is None:
            self.found[name] = Witness(name, tuple(algebras), detail)

    def feed(self, A: Algebra) -> None:
        missing = {k for k, w in self.found.items() if w is None}
        if not missing:
            return
        if any(k.startswith("pd-pairs") for k in missing):
            for v, p, q in _pairs(A):
                for label, pred in PD_PAIR_PATTERNS.items():
                    if pred(p, q):
                        self._hit(f"pd-pairs: {label}", [A], {"simple": v, "pd_S": p, "pd_IS": q})
        if A.cyclic:
            Qp, Qg = function_quiver(A, "psi"), function_quiver(A, "gamma")
            if Qp.component_sizes() != Qg.component_sizes():
                self._hit(
                    "quivers: component sizes differ",
                    [A],
                    {"psi": Qp.component_sizes(), "gamma": Qg.component_sizes()},
                )
            if "quivers: same psi-quiver, finpro 2 and 1" in missing:
                fp = finitistic_summary(A).finpro
                if fp in (1, 2):
                    key = (A.n, _rotation_key(A, Qp.successor))
                    seen = self._psi_classes.setdefault(key, {})
                    seen.setdefault(fp, A)
                    if 1 in seen and 2 in seen:
                        self._hit("quivers: same psi-quiver, finpro 2 and 1", [seen[2], seen[1]], {"finpro": [2, 1]})
            P = permutation(A)
            fixed = [v for v in A.vertices if P(v) == v]
            # with one vertex every permutation is trivial
            if fixed and A.n >= 2:
                self._hit("permutation: cyclic h with a fixed point", [A], {"h": str(P), "fixed": fixed})
            key = P.mapping
            if A.n >= 2 and key in self._h_seen and self._h_seen[key] != A:
                self._hit("permutation: distinct cyclic algebras with equal h", [self._h_seen[key], A], {"h": str(P)})
            self._h_seen.setdefault(key, A)
        if any(k.startswith("reflexive-chain") for k in missing):
            ch = reflexive_chain(A)
            for label, flag in zip(REFLEXIVE_LABELS, ch.proper):
                if flag:
                    self._hit(label, [A], None)
        for p in profiles(A):
            z = p.pd_S
            if is_even(z) and z >= 2 and z == p.pd_IS:
                X, Y = omega_k(A, simple(A, p.vertex), z), omega_k(A, inj(A, p.vertex), z)
                if X != Y:
                    self._hit(
                        "syzygies: even z = pd T = pd IT with different syzygies",
                        [A],
                        {"simple": p.vertex, "z": z, "Omega^z T": str(X), "Omega^z IT": str(Y)},
                    )
        rows = profiles(A)
        if Counter(p.f for p in rows) != Counter(p.f_star for p in rows):
            self._hit(
                "f-multisets: f and f* have different multisets",
                [A],
                {"f": [p.f for p in rows], "f*": [p.f_star for p in rows]},
            )

    def run(self, algebras: Iterable[Algebra]) -> dict[str, Optional[Witness]]:
        for A in algebras:
            self.feed(A)
            if self.done:
                break
        return self.found


def witness_search(pattern: str = "all", n_max: int = 6, c_max: int = 8) -> dict[str, Optional[Witness]]:
    return WitnessSearch(pattern).run(search_space(n_max, c_max))


def pattern_grid(n_max: int = 6, c_max: int = 8, bound: int = 4) -> dict:
    """For each possible cell (p, q) with finite entries up to ``bound``, a witness or None."""
    values = list(range(bound + 1)) + [INF]
    cells = {(p, q): None for p in values for q in values if pattern_possible(p, q)}
    for A in search_space(n_max, c_max):
        for v, p, q in _pairs(A):
            if (p, q) in cells and cells[(p, q)] is None:
                cells[(p, q)] = (serialize(A), v)
        if all(w is not None for w in cells.values()):
            break
    return cells


def findings(A: Algebra) -> dict:
    """Observations on questions left open: del S < e(S), and f versus f*."""
    rows = profiles(A)
    return {
        "del_below_e": [p.vertex for p in rows if p.delooping < p.e],
        "des_below_e_star": [p.vertex for p in rows if p.desuspending < p.e_star],
        "f_multiset_equals_f_star": Counter(p.f for p in rows) == Counter(p.f_star for p in rows),
        "des_multiset_equals_del": Counter(p.desuspending for p in rows) == Counter(p.delooping for p in rows),
    }


# ---------------------------------------------------------------- suites


def _theorems(A: Algebra) -> list[tuple[str, str]]:
    report = check_theorems(A, raise_on_failure=False)
    return [(exc.check, repr(exc.witness)) for exc in report.failures]


def _linear_dictionary(A: Algebra) -> list[tuple[str, str]]:
    if A.kind != LINEAR:
        return []
    out = []
    if dyck_to_kupisch(kupisch_to_dyck(A)).kupisch != A.kupisch:
        out.append(("dyck round trip", serialize(A)))
    try:
        if reconstruct_linear_from_h(permutation(A), A.n).kupisch != A.kupisch:
            out.append(("reconstruction from h", serialize(A)))
    except ValueError as exc:
        out.append(("reconstruction from h", str(exc)))
    return out


def _oracle(A: Algebra) -> list[tuple[str, str]]:
    out = []
    for U in all_modules(A):
        for V in all_modules(A):
            if hom_dim(A, U, V) != oracle_hom_dim(A, U, V):
                out.append(("hom_dim matches the oracle", f"{U} {V}"))
            if ext_dim(A, U, V, 1) != oracle_ext1(A, U, V):
                out.append(("ext_dim(., ., 1) matches the oracle", f"{U} {V}"))
    return out


def _findings(A: Algebra) -> list[tuple[str, str]]:
    f = findings(A)
    if f["del_below_e"] or f["des_below_e_star"]:
        return [("del S = e(S) for every simple", repr(f))]
    return []


# suite name -> (per-algebra check, short description)
SUITES: dict[str, tuple[Callable, str]] = {
    "theorems": (_theorems, "every named identity check on each algebra"),
    "linear": (_linear_dictionary, "Dyck round trip and reconstruction from h on linear algebras"),
    "oracle": (_oracle, "Hom/Ext counting formulas against explicit representations"),
    "del-vs-e": (_findings, "reports simples with del S < e(S) (none known)"),
}
ALL_SUITES = ("theorems", "linear", "oracle")


def run_suite(args: tuple[str, tuple[str, ...]]) -> tuple[str, list]:
    """Worker entry point: (serialized algebra, suite names) -> failures."""
    from .algebra import parse

    text, names = args
    A = parse(text)
    failures = []
    for name in names:
        try:
            failures.extend((name, check, witness) for check, witness in SUITES[name][0](A))
        except ContradictionReport as exc:
            failures.append((name, exc.check, repr(exc.witness)))
    return text, failures


def random_algebra(rng: random.Random, n: int, c_max: int, kind: str) -> Algebra:
    while True:
        if kind == LINEAR:
            c = [1]
            for _ in range(n - 1):
                c.append(rng.randint(2, min(c[-1] + 1, c_max)))
            return validate(tuple(c), LINEAR)
        c = [rng.randint(2, c_max)]
        for _ in range(n - 1):
            c.append(rng.randint(2, min(c[-1] + 1, c_max)))
        if c[0] <= c[-1] + 1:
            return validate(tuple(c), CYCLIC)
