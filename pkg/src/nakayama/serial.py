"""Indecomposable modules of a Nakayama algebra as (socle, length) pairs.

The zero module is represented by ``None``; every operator passes it through.
"""

from __future__ import annotations

import math
from typing import Iterator, NamedTuple, Optional

from .algebra import Algebra

INF = math.inf
# dimension assigned to the zero module
ZERO_DIM = -math.inf


class NonexistentModule(ValueError):
    pass


class TauUndefined(ValueError):
    pass


class Module(NamedTuple):
    socle: int
    length: int

    def __str__(self):
        return f"{self.socle}:{self.length}"


MaybeModule = Optional[Module]


class Predicates(NamedTuple):
    projective: bool
    injective: bool
    torsionless: bool
    divisible: bool
    peak: bool
    valley: bool
    minimal_projective: bool
    minimal_injective: bool


def exists(A: Algebra, socle: int, length: int) -> bool:
    if length < 1:
        return False
    s = A.wrap(socle)
    t = A.wrap(socle + length - 1)
    if s is None or t is None:
        return False
    return length <= A.c(t)


def make(A: Algebra, socle: int, length: int) -> Module:
    if not exists(A, socle, length):
        raise NonexistentModule(f"no indecomposable module with socle {socle} and length {length}")
    return Module(A.wrap(socle), length)


def parse_module(A: Algebra, text: str) -> Module:
    s, sep, ell = text.partition(":")
    if not sep:
        raise ValueError(f"module literal must look like 's:l', got {text!r}")
    return make(A, int(s), int(ell))


def top(A: Algebra, M: Module) -> int:
    return A.wrap(M.socle + M.length - 1)


def simple(A: Algebra, v: int) -> Module:
    return Module(A.wrap(v), 1)


def proj(A: Algebra, v: int) -> Module:
    """P(S_v)."""
    return Module(A.proj_socle[A.wrap(v) - 1], A.c(v))


def inj(A: Algebra, v: int) -> Module:
    """I(S_v)."""
    return Module(A.wrap(v), A.inj(v))


def proj_cover(A: Algebra, M: Module) -> Module:
    return proj(A, top(A, M))


def inj_env(A: Algebra, M: Module) -> Module:
    return inj(A, M.socle)


def is_projective(A: Algebra, M: MaybeModule) -> bool:
    return M is None or M.length == A.c(top(A, M))


def is_injective(A: Algebra, M: MaybeModule) -> bool:
    return M is None or M.length == A.inj(M.socle)


def syzygy(A: Algebra, M: MaybeModule) -> MaybeModule:
    if M is None:
        return None
    c = A.c(top(A, M))
    if M.length == c:
        return None
    return Module(A.proj_socle[top(A, M) - 1], c - M.length)


def cosyzygy(A: Algebra, M: MaybeModule) -> MaybeModule:
    if M is None:
        return None
    m = A.inj(M.socle)
    if M.length == m:
        return None
    return Module(A.wrap(M.socle + M.length), m - M.length)


def omega_k(A: Algebra, M: MaybeModule, k: int) -> MaybeModule:
    for _ in range(k):
        M = syzygy(A, M)
    return M


def sigma_k(A: Algebra, M: MaybeModule, k: int) -> MaybeModule:
    for _ in range(k):
        M = cosyzygy(A, M)
    return M


def _dimension(A: Algebra, M: MaybeModule, step, done, key: str):
    if M is None:
        return ZERO_DIM
    memo = A._memo.setdefault(key, {})
    if M in memo:
        return memo[M]
    seen = []
    X = M
    result = INF
    while X not in seen:
        if X in memo:
            result = memo[X] + len(seen)
            break
        if done(A, X):
            result = len(seen)
            break
        seen.append(X)
        X = step(A, X)
    for k, Y in enumerate(seen):
        memo[Y] = result - k if result != INF else INF
    return memo.get(M, result)


def pd(A: Algebra, M: MaybeModule):
    """Projective dimension; ``INF`` when the syzygy orbit repeats."""
    return _dimension(A, M, syzygy, is_projective, "pd")


def injdim(A: Algebra, M: MaybeModule):
    return _dimension(A, M, cosyzygy, is_injective, "id")


def tau(A: Algebra, M: Module) -> Module:
    if is_projective(A, M):
        raise TauUndefined(f"tau of the projective module {M}")
    return make(A, M.socle - 1, M.length)


def tau_inv(A: Algebra, M: Module) -> Module:
    if is_injective(A, M):
        raise TauUndefined(f"inverse tau of the injective module {M}")
    return make(A, M.socle + 1, M.length)


def rad(A: Algebra, M: Module) -> MaybeModule:
    return Module(M.socle, M.length - 1) if M.length > 1 else None


def mod_socle(A: Algebra, M: Module) -> MaybeModule:
    return Module(A.wrap(M.socle + 1), M.length - 1) if M.length > 1 else None


def is_torsionless(A: Algebra, M: MaybeModule) -> bool:
    if M is None:
        return True
    return any(
        exists(A, M.socle, m) and is_projective(A, Module(M.socle, m))
        for m in range(M.length, A.maxlen + 1)
    )


def is_divisible(A: Algebra, M: MaybeModule) -> bool:
    if M is None:
        return True
    t = M.socle + M.length - 1
    return any(
        exists(A, t - m + 1, m) and is_injective(A, make(A, t - m + 1, m))
        for m in range(M.length, A.maxlen + 1)
    )


def is_valley(A: Algebra, M: Module) -> bool:
    above = exists(A, M.socle, M.length + 1) and is_projective(A, Module(M.socle, M.length + 1))
    below = exists(A, M.socle - 1, M.length + 1) and is_injective(A, make(A, M.socle - 1, M.length + 1))
    return above and below


def predicates(A: Algebra, M: Module) -> Predicates:
    p = is_projective(A, M)
    i = is_injective(A, M)
    return Predicates(
        projective=p,
        injective=i,
        torsionless=is_torsionless(A, M),
        divisible=is_divisible(A, M),
        peak=p and i,
        valley=is_valley(A, M),
        minimal_projective=p and not is_projective(A, rad(A, M)),
        minimal_injective=i and not is_injective(A, mod_socle(A, M)),
    )


def all_modules(A: Algebra) -> list[Module]:
    memo = A._memo
    if "modules" not in memo:
        memo["modules"] = [Module(v, ell) for v in A.vertices for ell in range(1, A.inj(v) + 1)]
    return memo["modules"]


def iter_modules(A: Algebra) -> Iterator[Module]:
    return iter(all_modules(A))


def composition_factors(A: Algebra, M: Module) -> list[int]:
    """Vertices of the composition factors, from the top down to the socle."""
    return [A.wrap(M.socle + k) for k in range(M.length - 1, -1, -1)]


def is_submodule(A: Algebra, X: Module, M: Module) -> bool:
    return X.socle == M.socle and X.length <= M.length


def is_subfactor(A: Algebra, X: Module, M: Module) -> bool:
    """Whether X occurs as a submodule of a factor module of M."""
    slack = M.length - X.length
    if slack < 0:
        return False
    if A.cyclic:
        return any(A.wrap(M.socle + k) == X.socle for k in range(slack + 1))
    return M.socle <= X.socle <= M.socle + slack
