import pytest
from brute import Brute, admissible
from conftest import as_top_length
from hypothesis import given, settings
from hypothesis import strategies as st

from nakayama.algebra import CYCLIC, LINEAR, validate
from nakayama.homext import (
    ORACLE_CAP,
    OracleCapExceeded,
    depth,
    ext_dim,
    grade,
    grade_witness,
    hom_basis,
    hom_dim,
    oracle_ext1,
    oracle_hom_dim,
)
from nakayama.perm import h
from nakayama.serial import Module, all_modules, injdim, omega_k, proj, simple, tau, top


@st.composite
def algebras(draw, max_n=4, max_c=7):
    kind = draw(st.sampled_from([CYCLIC, LINEAR]))
    n = draw(st.integers(1, max_n))
    if kind == LINEAR:
        c = [1]
        for i in range(1, n):
            c.append(draw(st.integers(2, min(c[-1] + 1, i + 1))))
        return validate(c, LINEAR)
    c = draw(st.lists(st.integers(2, max_c), min_size=n, max_size=n).filter(lambda c: admissible(c, True)))
    return validate(c, CYCLIC)


def test_hom_values(fix):
    SI, C4 = fix["SI"], fix["C4"]
    assert hom_dim(SI, proj(SI, 1), proj(SI, 1)) == 1
    assert hom_basis(SI, proj(SI, 1), proj(SI, 1)).image_lengths == (2,)
    assert hom_dim(C4, simple(C4, 1), proj(C4, 2)) == 1
    assert hom_dim(C4, simple(C4, 3), proj(C4, 2)) == 0
    for A in fix.values():
        for v in A.vertices:
            assert hom_dim(A, simple(A, v), simple(A, v)) == 1
            assert oracle_hom_dim(A, simple(A, v), simple(A, v)) == 1
    assert hom_dim(C4, None, simple(C4, 1)) == 0


def test_long_modules_have_several_homs():
    # modules longer than n wrap around the cycle, so Hom can exceed one dimension
    A = validate((4, 5), CYCLIC)
    U = proj(A, 2)
    assert U.length == 5
    assert hom_dim(A, U, U) == oracle_hom_dim(A, U, U) == 3


def test_ext_values(fix):
    L5b, C4 = fix["L5b"], fix["C4"]
    assert ext_dim(L5b, simple(L5b, 4), simple(L5b, 2), 2) == 0
    assert h(L5b, 4) == 2
    T = simple(C4, 2)
    assert ext_dim(C4, T, simple(C4, top(C4, omega_k(C4, T, 3))), 3) >= 1
    for A in fix.values():
        for v in A.vertices:
            for M in all_modules(A):
                assert ext_dim(A, proj(A, v), M, 1) == 0


@pytest.mark.parametrize("name", ["C4", "C5", "L5a", "SI", "G4"])
def test_oracle_agrees_on_all_pairs(fix, name):
    A = fix[name]
    B = Brute(A.kupisch, A.cyclic)
    mods = all_modules(A)
    for U in mods:
        for V in mods:
            hd = hom_dim(A, U, V)
            assert hd == oracle_hom_dim(A, U, V)
            assert hd == B.hom(as_top_length(A, U), as_top_length(A, V))
            assert ext_dim(A, U, V, 1) == oracle_ext1(A, U, V)


@settings(max_examples=40, deadline=None)
@given(algebras(), st.data())
def test_hom_and_ext_match_independent_representations(A, data):
    B = Brute(A.kupisch, A.cyclic)
    mods = all_modules(A)
    U = data.draw(st.sampled_from(mods))
    V = data.draw(st.sampled_from(mods))
    d = data.draw(st.integers(0, 3))
    tu, tv = as_top_length(A, U), as_top_length(A, V)
    assert hom_dim(A, U, V) == B.hom(tu, tv) == oracle_hom_dim(A, U, V)
    assert ext_dim(A, U, V, d) == B.ext(tu, tv, d)


def test_oracle_cap():
    A = validate((ORACLE_CAP + 1, ORACLE_CAP + 1), CYCLIC)
    with pytest.raises(OracleCapExceeded):
        oracle_hom_dim(A, proj(A, 1), proj(A, 1))


def test_grade_and_depth(fix):
    G4 = fix["G4"]
    assert grade(G4, 3) == 2
    assert [grade(G4, v) for v in G4.vertices] == [0, 1, 2, 0]
    assert depth(G4) == 2
    assert depth(validate((2, 3, 3, 4, 4, 5, 5, 6), CYCLIC)) == 2
    for A in fix.values():
        for v in A.torsionless_simples:
            assert grade(A, v) == 0


@pytest.mark.parametrize("name", ["L5a", "L5b", "L4e", "C4", "G4", "C5", "SI"])
def test_grade_matches_brute(fix, name):
    A = fix[name]
    B = Brute(A.kupisch, A.cyclic)
    assert [grade(A, v) for v in A.vertices] == [B.grade(v) for v in A.vertices]


def test_grade_witness(fix):
    G4 = fix["G4"]
    w = grade_witness(G4, 3)
    assert w["N"] == tau(G4, omega_k(G4, simple(G4, 3), 1)) and w["id_N"] == 2
    assert ext_dim(G4, simple(G4, 3), w["N"], 2) >= 1
    w = grade_witness(G4, 2)
    assert w["N"] == tau(G4, simple(G4, 2)) and injdim(G4, w["N"]) == 1
    with pytest.raises(ValueError):
        grade_witness(G4, 1)
    assert Module(1, 1) == simple(G4, 1)
