"""Connected Nakayama algebras given by their Kupisch series.

Conventions used throughout the package: vertices are 1..n, ``c_i`` is the
length of the indecomposable projective with top ``S_i``, the
Auslander-Reiten translate of ``S_i`` is ``S_{i-1}`` and therefore
``soc P(S_i) = i - c_i + 1`` (read modulo n for cyclic algebras).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Iterator, Sequence

LINEAR = "linear"
CYCLIC = "cyclic"
KINDS = (LINEAR, CYCLIC)


class AdmissibilityError(ValueError):
    """The integer sequence is not the Kupisch series of a connected Nakayama algebra."""

    def __init__(self, constraint: str, index: int):
        super().__init__(f"{constraint} (at index {index})")
        self.constraint = constraint
        self.index = index


class EmptySeries(ValueError):
    pass


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def canonical_rotation(entries: Sequence[int]) -> tuple[int, ...]:
    """Lexicographically smallest rotation."""
    entries = tuple(entries)
    return min(entries[k:] + entries[:k] for k in range(len(entries)))


@dataclass(frozen=True, eq=False)
class Algebra:
    kupisch: tuple[int, ...]
    kind: str
    inj_len: tuple[int, ...] = field(init=False, repr=False)
    proj_socle: tuple[int, ...] = field(init=False, repr=False)
    # per-algebra memo for derived data (syzygy tables, profiles, ...)
    _memo: dict = field(init=False, repr=False, default_factory=dict)

    def __post_init__(self):
        _check_admissible(self.kupisch, self.kind)
        object.__setattr__(self, "kupisch", tuple(self.kupisch))
        n = len(self.kupisch)
        proj_socle = tuple(self.wrap(i - self.kupisch[i - 1] + 1) for i in range(1, n + 1))
        object.__setattr__(self, "proj_socle", proj_socle)
        object.__setattr__(self, "inj_len", tuple(self._scan_inj_len(v) for v in range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.kupisch)

    @property
    def maxlen(self) -> int:
        return max(self.kupisch)

    @property
    def cyclic(self) -> bool:
        return self.kind == CYCLIC

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def torsionless_simples(self) -> frozenset[int]:
        return frozenset(self.proj_socle)

    def wrap(self, v: int) -> int | None:
        """Reduce a vertex into 1..n; ``None`` when a linear index falls off the end."""
        if self.cyclic:
            return (v - 1) % self.n + 1
        return v if 1 <= v <= self.n else None

    def c(self, v: int) -> int:
        return self.kupisch[self.wrap(v) - 1]

    def inj(self, v: int) -> int:
        return self.inj_len[self.wrap(v) - 1]

    def _scan_inj_len(self, v: int) -> int:
        length = 0
        for ell in range(1, self.maxlen + 1):
            top = self.wrap(v + ell - 1)
            if top is None or ell > self.kupisch[top - 1]:
                break
            length = ell
        return length

    def canonical(self) -> tuple[int, ...]:
        return canonical_rotation(self.kupisch) if self.cyclic else self.kupisch

    def __eq__(self, other):
        if not isinstance(other, Algebra):
            return NotImplemented
        return self.kind == other.kind and self.canonical() == other.canonical()

    def __hash__(self):
        return hash((self.kind, self.canonical()))

    def __repr__(self):
        return f"Algebra({serialize(self)!r})"

    def __getstate__(self):
        return (self.kupisch, self.kind)

    def __setstate__(self, state):
        kupisch, kind = state
        object.__setattr__(self, "_memo", {})
        object.__setattr__(self, "kupisch", kupisch)
        object.__setattr__(self, "kind", kind)
        self.__post_init__()


def _check_admissible(entries: Sequence[int], kind: str) -> None:
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    if len(entries) == 0:
        raise EmptySeries("Kupisch series must be nonempty")
    c = list(entries)
    n = len(c)
    if any(not isinstance(x, int) or isinstance(x, bool) for x in c):
        raise AdmissibilityError("entries must be integers", 1)
    if kind == CYCLIC:
        for i in range(1, n + 1):
            if c[i - 1] < 2:
                raise AdmissibilityError("cyclic entries must be at least 2", i)
            prev = c[i - 2] if i > 1 else c[n - 1]
            if c[i - 1] > prev + 1:
                raise AdmissibilityError(f"c_{i} = {c[i - 1]} exceeds c_{(i - 2) % n + 1} + 1 = {prev + 1}", i)
        return
    if c[0] != 1:
        raise AdmissibilityError("linear series must start with c_1 = 1", 1)
    for i in range(2, n + 1):
        if c[i - 1] < 2:
            raise AdmissibilityError("linear entries after the first must be at least 2", i)
        if c[i - 1] > c[i - 2] + 1:
            raise AdmissibilityError(f"c_{i} = {c[i - 1]} exceeds c_{i - 1} + 1 = {c[i - 2] + 1}", i)


def validate(entries: Sequence[int], kind: str) -> Algebra:
    return Algebra(tuple(entries), kind)


def opposite(A: Algebra, normalize: bool = True) -> Algebra:
    """The opposite algebra, with vertex ``v`` of A sent to ``rho(v)``."""
    n = A.n
    c_op = [0] * n
    for v in A.vertices:
        c_op[rho(A, v) - 1] = A.inj(v)
    if A.cyclic and normalize:
        c_op = canonical_rotation(c_op)
    return Algebra(tuple(c_op), A.kind)


def rho(A: Algebra, v: int) -> int:
    """Vertex relabelling used by :func:`opposite` (before normalization)."""
    if A.cyclic:
        return (-v) % A.n + 1
    return A.n + 1 - v


def enumerate_algebras(n: int, max_c: int, kind: str, start: int = 0) -> Iterator[Algebra]:
    """All admissible series with n entries bounded by ``max_c``, in lexicographic order.

    Cyclic series are produced once per rotation class. ``start`` skips that many
    results so that the stream can be split between workers.
    """
    return itertools.islice(_series(n, max_c, kind), start, None)


def _series(n: int, max_c: int, kind: str) -> Iterator[Algebra]:
    if n < 1:
        return
    if kind == LINEAR:
        if max_c < 1:
            return
        firsts = [1]
    else:
        firsts = range(2, max_c + 1)

    def extend(prefix: list[int]) -> Iterator[list[int]]:
        if len(prefix) == n:
            yield prefix
            return
        for x in range(2, min(prefix[-1] + 1, max_c) + 1):
            yield from extend(prefix + [x])

    for first in firsts:
        for c in extend([first]):
            if kind == CYCLIC:
                if c[0] > c[-1] + 1 or tuple(c) != canonical_rotation(c):
                    continue
            yield Algebra(tuple(c), kind)


def serialize(A: Algebra) -> str:
    return f"{A.kind}:" + ",".join(str(x) for x in A.kupisch)


_TOKEN = re.compile(r"\s*(\d+)\s*")


def parse(text: str) -> Algebra:
    head, sep, tail = text.partition(":")
    if not sep:
        raise ParseError("expected 'kind:' prefix", 0)
    kind = head.strip()
    if kind not in KINDS:
        raise ParseError(f"unknown kind {kind!r}", len(head) - len(head.lstrip()))
    entries = []
    pos = len(head) + 1
    if not tail.strip():
        raise EmptySeries("Kupisch series must be nonempty")
    for chunk in tail.split(","):
        m = _TOKEN.fullmatch(chunk)
        if m is None:
            raise ParseError(f"expected a nonnegative integer, got {chunk.strip()!r}", pos)
        entries.append(int(m.group(1)))
        pos += len(chunk) + 1
    return validate(entries, kind)
