"""Named identity checks run against a single algebra.

Every check raises ContradictionReport on failure and returns ``"skip"`` when
it does not apply (most of the psi/gamma and epsilon identities need a cyclic
algebra).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import Algebra, opposite
from .epsilon import (
    check_delta_cover,
    check_gamma_correspondence,
    classify,
    delta,
    epsilon_algebra,
    mho_omega_scan,
    reflexive_chain,
)
from .errors import ContradictionReport
from .homdim import (
    a_value,
    covering_lift_check,
    delooping_level,
    dimension_profile,
    finitistic_summary,
    function_quiver,
    gamma,
    has_infinite_gldim,
    is_even,
    is_odd,
    iterate,
    psi,
    profiles,
)
from .homext import depth, grade, grade_witness
from .perm import h_closed_form, permutation, ties
from .serial import (
    INF,
    all_modules,
    composition_factors,
    cosyzygy,
    inj,
    injdim,
    is_injective,
    is_projective,
    is_subfactor,
    is_submodule,
    is_torsionless,
    omega_k,
    pd,
    proj,
    simple,
    syzygy,
)

SKIP = "skip"


def _fail(name, witness, A):
    raise ContradictionReport(name, witness, A)


def check_summary(A):
    finitistic_summary(A)


def check_dimension_recursion(A):
    for M in all_modules(A):
        if not is_projective(A, M) and pd(A, M) != 1 + pd(A, syzygy(A, M)):
            _fail("pd M = 1 + pd Omega M", M, A)
        if not is_injective(A, M) and injdim(A, M) != 1 + injdim(A, cosyzygy(A, M)):
            _fail("id M = 1 + id Sigma M", M, A)


def check_odd_or_even(A):
    for p in profiles(A):
        if not (is_odd(p.pd_S) or is_even(p.pd_IS)):
            _fail("S is odd or IS is even", p.vertex, A)
        if not (is_odd(p.id_S) or is_even(p.id_PS)):
            _fail("S is co-odd or PS is co-even", p.vertex, A)
        if p.e == INF or p.e_star == INF:
            _fail("e(S), e*(S) finite", p.vertex, A)


def check_images(A):
    Qp, Qg = function_quiver(A, "psi"), function_quiver(A, "gamma")
    pd2 = {v for v in A.vertices if pd(A, simple(A, v)) >= 2}
    id2 = {v for v in A.vertices if injdim(A, simple(A, v)) >= 2}
    if Qp.image() != pd2:
        _fail("Im psi = {pd >= 2}", (sorted(Qp.image()), sorted(pd2)), A)
    if Qg.image() != id2:
        _fail("Im gamma = {id >= 2}", (sorted(Qg.image()), sorted(id2)), A)


def check_subfactor_laws(A):
    mods = all_modules(A)
    for M in mods:
        pm = pd(A, M)
        for X in mods:
            if not is_subfactor(A, X, M):
                continue
            px = pd(A, X)
            if is_odd(pm) and not (is_odd(px) and px <= pm):
                _fail("subfactor of an odd module is odd and smaller", (X, M), A)
            if is_even(px) and not (is_even(pm) and pm <= px):
                _fail("module with an even subfactor is even and smaller", (X, M), A)


def check_maximum_property(A):
    for M in all_modules(A):
        pm = pd(A, M)
        if is_odd(pm):
            factors = [pd(A, simple(A, v)) for v in composition_factors(A, M)]
            if not all(is_odd(x) for x in factors) or max(factors) != pm:
                _fail("odd module has odd factors and pd = max", M, A)


def check_second_syzygy_factors(A):
    for v in A.vertices:
        X = omega_k(A, simple(A, v), 2)
        pre = sorted(u for u in A.vertices if psi(A, u) == v)
        got = sorted(composition_factors(A, X)) if X is not None else []
        if got != pre:
            _fail("factors of Omega^2 S are the psi-preimages of S", (v, got, pre), A)


def check_odd_realization(A):
    fp = finitistic_summary(A).finpro
    pds = {p.pd_S for p in profiles(A)}
    for i in range(1, fp + 1, 2):
        if i not in pds:
            _fail("every odd i <= finpro is pd of a simple", i, A)


def check_psi_depth(A):
    if not A.cyclic:
        return SKIP
    aA = a_value(A, "psi")
    for p in profiles(A):
        if (p.a != INF) != is_odd(p.pd_S):
            _fail("a(S) finite iff S odd", p.vertex, A)
        if p.a != INF and p.pd_S != 2 * p.a - 1:
            _fail("pd S = 2a(S) - 1", p.vertex, A)
        if p.a == INF and not (is_even(p.pd_IS) and p.pd_IS <= 2 * aA):
            _fail("psi-cyclic S has pd IS even and at most 2a(A)", p.vertex, A)
        if (p.a_prime != INF) != is_odd(p.id_S):
            _fail("a'(S) finite iff id S odd", p.vertex, A)
        if p.a_prime != INF and p.id_S != 2 * p.a_prime - 1:
            _fail("id S = 2a'(S) - 1", p.vertex, A)


def check_finpro_bounds(A):
    if not A.cyclic:
        return SKIP
    aA, fp = a_value(A, "psi"), finitistic_summary(A).finpro
    if not 2 * aA - 1 <= fp <= 2 * aA:
        _fail("2a(A) - 1 <= finpro <= 2a(A)", (aA, fp), A)


def check_f_and_g(A):
    rows = profiles(A)
    fp = finitistic_summary(A).finpro
    for p in rows:
        if p.f > p.e:
            _fail("f <= e", p.vertex, A)
        if p.f != p.e and not (is_odd(p.pd_S) and is_even(p.pd_IS)):
            _fail("f = e unless S odd and IS even", p.vertex, A)
    if max(p.f for p in rows) != fp or max(p.f_star for p in rows) != fp:
        _fail("max f = max f* = finpro", [(p.f, p.f_star) for p in rows], A)
    if has_infinite_gldim(A):
        if any(p.g != p.f for p in rows):
            _fail("g = f for infinite global dimension", [(p.g, p.f) for p in rows], A)
        if max(p.g for p in rows) != fp:
            _fail("max g = finpro", None, A)


def check_gorenstein(A):
    s = finitistic_summary(A)
    if not s.gorenstein:
        return SKIP
    if s.gldim == INF and s.finpro % 2:
        _fail("Gorenstein with infinite gldim has even finpro", s.finpro, A)
    dims = (max(pd(A, inj(A, v)) for v in A.vertices), max(injdim(A, proj(A, v)) for v in A.vertices))
    if dims != (s.finpro, s.finpro):
        _fail("Gorenstein: pd DA = id A = finpro", dims, A)


def check_grade(A):
    s = finitistic_summary(A)
    for p in profiles(A):
        v, g, d = p.vertex, grade(A, p.vertex), p.delooping
        tl = is_torsionless(A, simple(A, v))
        if g > d:
            _fail("grade S <= del S", v, A)
        if (d == 0) != tl or (g == 0) != tl:
            _fail("del S = 0 iff grade S = 0 iff S torsionless", v, A)
        one = not tl and p.pd_S == 1
        if (d == 1) != one or (g == 1) != one:
            _fail("del S = 1 iff grade S = 1 iff pd S = 1 and S not torsionless", v, A)
        if d == 2 and g != 2:
            _fail("del S = 2 implies grade S = 2", v, A)
        if g >= 1:
            grade_witness(A, v)
    if depth(A) > s.del_A:
        _fail("depth A <= del A", None, A)


def check_nested_delooping(A):
    mods = all_modules(A)
    for Y in mods:
        pY = pd(A, Y)
        if pY == INF:
            continue
        for X in mods:
            if is_submodule(A, X, Y) and delooping_level(A, X) > pY:
                _fail("del X <= pd Y for X inside Y", (X, Y), A)


def check_ties(A):
    for t in ties(A):
        if t.z == 1 and t.S != A.wrap(t.T - 1):
            _fail("z = 1 ties are given by tau", t.T, A)
        if t.z == 0 and not (is_projective(A, t.peak) and is_injective(A, t.peak)):
            _fail("z = 0 ties carry a peak", t.T, A)
        if t.z >= 1 and t.z % 2 == 1:
            if omega_k(A, simple(A, t.T), t.z) != omega_k(A, inj(A, t.T), t.z) and pd(A, inj(A, t.T)) == t.z:
                _fail("odd z = pd T = pd IT gives equal syzygies", t.T, A)


def check_permutation(A):
    P = permutation(A)
    for v in A.vertices:
        if h_closed_form(A, v) != P(v):
            _fail("closed form of h", v, A)
        e = P.z[v - 1]
        if (e == 0) != is_torsionless(A, simple(A, v)) or (e == 0) != is_projective(A, inj(A, v)):
            _fail("e = 0 iff torsionless iff IS projective", v, A)
    r = len(A.torsionless_simples)
    if sum(1 for z in P.z if z >= 2) > r:
        _fail("|union of E(z), z >= 2| <= r", P.z, A)
    if A.cyclic:
        aA = a_value(A, "psi")
        if aA >= 1:
            Q = function_quiver(A, "psi")
            lhs = {v for v in A.vertices if P.z[v - 1] == 2 * aA}
            rhs = {v for v in Q.cyclic_vertices if pd(A, inj(A, v)) == 2 * aA}
            if lhs != rhs:
                _fail("E(2a(A)) = psi-cyclic simples with pd IS = 2a(A)", (sorted(lhs), sorted(rhs)), A)


def check_psi_gamma_identities(A):
    if not A.cyclic:
        return SKIP

    def tau(A, v):
        return A.wrap(v - 1)

    def tau_inv(A, v):
        return A.wrap(v + 1)

    def comp(*fs):
        def run(v):
            for f, t in reversed(fs):
                v = iterate(f, A, v, t)
            return v

        return run

    for t in range(a_value(A, "psi") + 3):
        pairs = [
            (comp((psi, t), (gamma, t), (psi, t)), comp((psi, t))),
            (comp((gamma, t), (psi, t), (gamma, t)), comp((gamma, t))),
            (comp((psi, t), (tau_inv, 1), (gamma, t), (tau, 1), (psi, t)), comp((psi, t))),
            (comp((gamma, t), (tau, 1), (psi, t), (tau_inv, 1), (gamma, t)), comp((gamma, t))),
        ]
        for k, (lhs, rhs) in enumerate(pairs):
            for v in A.vertices:
                if lhs(v) != rhs(v):
                    _fail(f"psi/gamma identity {k + 1} at t = {t}", v, A)
        im_psi = {iterate(psi, A, v, t) for v in A.vertices}
        im_gamma = {iterate(gamma, A, v, t) for v in A.vertices}
        for f in (comp((gamma, t)), comp((gamma, t), (tau, 1))):
            if {f(v) for v in im_psi} != im_gamma or len({f(v) for v in im_psi}) != len(im_psi):
                _fail(f"bijection Im psi^t -> Im gamma^t at t = {t}", None, A)


def check_opposite(A):
    s = finitistic_summary(A)
    B = opposite(A)
    sb = finitistic_summary(B)
    if sb.finpro != s.fininj:
        _fail("finpro(A^op) = fininj(A)", (sb.finpro, s.fininj), A)
    if not A.cyclic:
        return
    if a_value(A, "psi") != a_value(B, "psi") or a_value(A, "psi") != a_value(A, "gamma"):
        _fail("a(A) = a(A^op)", None, A)
    if not s.c_psi == s.c_gamma == sb.c_psi:
        _fail("c(A) = c(A^op)", (s.c_psi, s.c_gamma, sb.c_psi), A)
    if len(function_quiver(A, "psi").components) != len(function_quiver(A, "gamma").components):
        _fail("psi- and gamma-quivers have equally many components", None, A)


def check_covering_lifts(A):
    if not A.cyclic:
        return SKIP
    covering_lift_check(A, -3 * A.n, 3 * A.n)


def check_epsilon(A):
    if not A.cyclic:
        return SKIP
    cls = classify(A)
    for t in cls.T_id_ge2:
        D = delta(A, t).module
        factors = [A.wrap(D.socle + k) for k in range(D.length)]
        if [v for v in factors if v in cls.S_torsionless] != [D.socle]:
            _fail("soc Delta T is its only torsionless factor", t, A)
        if [v for v in factors if v in cls.T_id_ge2] != [t]:
            _fail("T is the only factor of Delta T with id >= 2", t, A)
    check_delta_cover(A)
    epsilon_algebra(A)
    check_gamma_correspondence(A)


def check_reflexive_chain(A):
    reflexive_chain(A)


def check_mho_scan(A):
    for p in profiles(A):
        scan = mho_omega_scan(A, p.vertex, p.delooping + 3)
        for t, X, flag in scan.entries:
            if flag and p.delooping > t:
                _fail("torsionless mho^t Omega^t S gives del S <= t", (p.vertex, t), A)


CHECKS = {
    "summary": check_summary,
    "dimension-recursion": check_dimension_recursion,
    "odd-or-even": check_odd_or_even,
    "images": check_images,
    "subfactor-laws": check_subfactor_laws,
    "maximum-property": check_maximum_property,
    "second-syzygy-factors": check_second_syzygy_factors,
    "odd-realization": check_odd_realization,
    "psi-depth": check_psi_depth,
    "finpro-bounds": check_finpro_bounds,
    "f-and-g": check_f_and_g,
    "gorenstein": check_gorenstein,
    "grade": check_grade,
    "nested-delooping": check_nested_delooping,
    "ties": check_ties,
    "permutation": check_permutation,
    "psi-gamma-identities": check_psi_gamma_identities,
    "opposite": check_opposite,
    "covering-lifts": check_covering_lifts,
    "epsilon": check_epsilon,
    "reflexive-chain": check_reflexive_chain,
    "mho-scan": check_mho_scan,
}


@dataclass
class CheckReport:
    algebra: Algebra
    results: dict = field(default_factory=dict)  # name -> "pass" | "skip" | ContradictionReport

    @property
    def failures(self) -> list[ContradictionReport]:
        return [r for r in self.results.values() if isinstance(r, ContradictionReport)]

    @property
    def ok(self) -> bool:
        return not self.failures


def check_theorems(A: Algebra, names=None, raise_on_failure: bool = True) -> CheckReport:
    report = CheckReport(A)
    for name in names or CHECKS:
        try:
            out = CHECKS[name](A)
            report.results[name] = SKIP if out == SKIP else "pass"
        except ContradictionReport as exc:
            if raise_on_failure:
                raise
            report.results[name] = exc
    return report
