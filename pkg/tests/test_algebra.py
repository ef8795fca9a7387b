import pickle

import pytest
from brute import all_series, rotation_classes

from nakayama.algebra import (
    CYCLIC,
    LINEAR,
    AdmissibilityError,
    EmptySeries,
    ParseError,
    canonical_rotation,
    enumerate_algebras,
    opposite,
    parse,
    serialize,
    validate,
)
from nakayama.homdim import finitistic_summary


def test_injective_lengths(fix):
    # brute scan over all quotients of projectives gives (4,3,3,2), twelve modules in all
    assert fix["C4"].inj_len == (4, 3, 3, 2)
    assert fix["L5a"].inj_len[0] == 4
    assert fix["L5a"].inj_len == (4, 3, 3, 2, 1)


def test_derived_tables(fix):
    A = fix["C4"]
    assert A.n == 4 and A.maxlen == 4
    assert A.proj_socle == (3, 1, 1, 1)
    assert A.torsionless_simples == frozenset({1, 3})


def test_admissibility_errors():
    with pytest.raises(AdmissibilityError) as exc:
        validate((5, 2), CYCLIC)
    assert exc.value.index == 1
    with pytest.raises(AdmissibilityError):
        validate((1, 2, 4), LINEAR)
    with pytest.raises(AdmissibilityError):
        validate((1, 1), LINEAR)  # disconnected
    with pytest.raises(AdmissibilityError):
        parse("cyclic:1,2")
    with pytest.raises(EmptySeries):
        parse("cyclic:")


def test_parse_and_serialize(fix):
    assert parse("cyclic:3,2,3,4") == fix["C4"]
    assert parse(" linear : 1, 2,3,4 ,3") == fix["L5a"]
    assert serialize(fix["C4"]) == "cyclic:3,2,3,4"
    for bad in ("3,2,3", "triangle:1,2", "linear:1,,2", "linear:1,x"):
        with pytest.raises(ParseError):
            parse(bad)


def test_rotation_equality():
    assert parse("cyclic:2,3,3,4") == parse("cyclic:3,3,4,2")
    assert hash(parse("cyclic:2,3,3,4")) == hash(parse("cyclic:4,2,3,3"))
    assert canonical_rotation((3, 2, 3, 4)) == (2, 3, 4, 3)
    assert parse("cyclic:2,3") != parse("linear:1,2")


def test_pickle_round_trip(fix):
    A = fix["C5"]
    B = pickle.loads(pickle.dumps(A))
    assert B == A and B.inj_len == A.inj_len


def test_opposite(fix):
    assert opposite(fix["SI"]) == fix["SI"]
    assert opposite(opposite(fix["C4"])) == fix["C4"]
    assert opposite(opposite(fix["L5a"])).kupisch == fix["L5a"].kupisch
    for A in fix.values():
        assert sorted(opposite(A).kupisch) == sorted(A.inj_len)
    assert finitistic_summary(opposite(fix["C4"])).finpro == finitistic_summary(fix["C4"]).fininj == 3


@pytest.mark.parametrize("n", range(1, 8))
def test_linear_enumeration_matches_brute(n):
    got = [A.kupisch for A in enumerate_algebras(n, n, LINEAR)]
    assert got == sorted(got)
    assert set(got) == set(all_series(n, n, False))


def test_linear_counts_are_catalan():
    assert [sum(1 for _ in enumerate_algebras(n, n, LINEAR)) for n in range(1, 9)] == [1, 1, 2, 5, 14, 42, 132, 429]
    assert sum(1 for _ in enumerate_algebras(4, 4, LINEAR)) == 5
    assert sum(1 for _ in enumerate_algebras(5, 5, LINEAR)) == 14


@pytest.mark.parametrize("n,c", [(1, 4), (2, 3), (3, 5), (4, 5), (5, 5)])
def test_cyclic_enumeration_matches_brute(n, c):
    got = [A.kupisch for A in enumerate_algebras(n, c, CYCLIC)]
    assert len(got) == len(set(got))
    assert set(got) == rotation_classes(n, c)


def test_cyclic_two_vertices():
    assert [A.kupisch for A in enumerate_algebras(2, 3, CYCLIC)] == [(2, 2), (2, 3), (3, 3)]


def test_enumeration_restart():
    full = list(enumerate_algebras(4, 5, CYCLIC))
    assert list(enumerate_algebras(4, 5, CYCLIC, start=3)) == full[3:]
