import pytest
from conftest import as_top_length, brute_of

from nakayama.serial import (
    INF,
    ZERO_DIM,
    Module,
    NonexistentModule,
    TauUndefined,
    all_modules,
    composition_factors,
    cosyzygy,
    exists,
    inj,
    inj_env,
    injdim,
    is_divisible,
    is_injective,
    is_projective,
    is_submodule,
    is_subfactor,
    is_torsionless,
    make,
    omega_k,
    parse_module,
    pd,
    predicates,
    proj,
    proj_cover,
    rad,
    sigma_k,
    simple,
    syzygy,
    tau,
    tau_inv,
    top,
)


def test_existence(fix):
    A = fix["C4"]
    assert top(A, make(A, 2, 3)) == 4
    with pytest.raises(NonexistentModule):
        make(A, 2, 4)
    with pytest.raises(NonexistentModule):
        make(fix["L5a"], 5, 2)
    assert parse_module(A, "2:3") == Module(2, 3)
    assert str(Module(2, 3)) == "2:3"


def test_existence_closed_under_sub_and_quotient(fix):
    for A in fix.values():
        for M in all_modules(A):
            for ell in range(1, M.length):
                assert exists(A, M.socle, ell)
                assert exists(A, A.wrap(M.socle + M.length - ell), ell)


def test_covers_and_envelopes(fix):
    C4, SI = fix["C4"], fix["SI"]
    assert proj_cover(C4, simple(C4, 2)) == Module(1, 2)
    assert inj_env(C4, simple(C4, 1)) == Module(1, 4) == proj(C4, 4)
    assert inj_env(SI, simple(SI, 1)) == proj_cover(SI, simple(SI, 2))


def test_syzygies(fix):
    C4, L5a, SI = fix["C4"], fix["L5a"], fix["SI"]
    assert syzygy(C4, simple(C4, 2)) == simple(C4, 1)
    assert syzygy(C4, simple(C4, 1)) == Module(3, 2)
    assert syzygy(L5a, proj(L5a, 3)) is None
    assert omega_k(C4, simple(C4, 2), 3) == Module(1, 2) == proj(C4, 2)
    assert omega_k(C4, Module(2, 3), 0) == Module(2, 3)
    assert omega_k(fix["C5"], simple(fix["C5"], 1), 3) == simple(fix["C5"], 1)


def test_cosyzygies(fix):
    C4, SI = fix["C4"], fix["SI"]
    assert cosyzygy(C4, simple(C4, 1)) == Module(2, 3)
    assert cosyzygy(C4, Module(1, 4)) is None
    assert cosyzygy(SI, simple(SI, 1)) == simple(SI, 2)
    assert sigma_k(C4, simple(C4, 2), 3) == inj(C4, 2)


def test_dimensions(fix):
    C4 = fix["C4"]
    assert [pd(C4, simple(C4, v)) for v in C4.vertices] == [2, 3, 1, 1]
    assert pd(fix["C5"], simple(fix["C5"], 1)) == INF
    assert all(pd(A, proj(A, v)) == 0 for A in fix.values() for v in A.vertices)
    assert pd(C4, None) == ZERO_DIM


@pytest.mark.parametrize("name", ["L5a", "L5b", "L4e", "C4", "G4", "C5", "SI"])
def test_dimensions_match_brute(fix, name):
    A = fix[name]
    B = brute_of(A)
    assert len(all_modules(A)) == len(B.mods)
    for M in all_modules(A):
        X = as_top_length(A, M)
        assert pd(A, M) == B.pd(X)
        assert injdim(A, M) == B.injdim(X)
        assert syzygy(A, M) == (None if B.syz(X) is None else Module(B.soc(B.syz(X)), B.syz(X)[1]))
        assert is_torsionless(A, M) == B.torsionless(X)
        assert is_projective(A, M) == B.is_proj(X) and is_injective(A, M) == B.is_inj(X)


def test_predicates(fix):
    C4, SI = fix["C4"], fix["SI"]
    assert [is_torsionless(C4, simple(C4, v)) for v in C4.vertices] == [True, False, True, False]
    assert predicates(C4, Module(1, 4)).peak
    assert all(predicates(SI, proj(SI, v)).peak for v in SI.vertices)
    assert is_projective(C4, None) and is_injective(C4, None)
    assert is_divisible(C4, simple(C4, 1)) == (not is_projective(C4, simple(C4, 1)))


def test_tau(fix):
    C4 = fix["C4"]
    assert tau(C4, simple(C4, 2)) == simple(C4, 1)
    with pytest.raises(TauUndefined):
        tau(C4, proj(C4, 4))
    for A in fix.values():
        for M in all_modules(A):
            if not is_projective(A, M) and not is_injective(A, M):
                assert tau_inv(A, tau(A, M)) == M


def test_module_counts(fix):
    # sum of injective lengths
    assert len(all_modules(fix["SI"])) == 4
    assert len(all_modules(fix["C4"])) == 12
    assert len(all_modules(fix["L4e"])) == 7
    for A in fix.values():
        assert len(all_modules(A)) == sum(A.inj_len) == sum(A.kupisch)


def test_composition_and_containment(fix):
    C4 = fix["C4"]
    M = Module(1, 4)
    assert composition_factors(C4, M) == [4, 3, 2, 1]
    assert rad(C4, M) == Module(1, 3)
    assert is_submodule(C4, Module(1, 2), M)
    assert not is_submodule(C4, Module(2, 2), M)
    assert is_subfactor(C4, Module(2, 2), M)
    assert rad(C4, simple(C4, 3)) is None
