import itertools
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from pasep2.histories import z_poly_paths
from pasep2.permutations import (
    PSP,
    SignedValue,
    ade_of_psp,
    count_31_2,
    count_31_bar2,
    enumerate_psp,
    equivalence_class,
    gc,
    gdes,
    tw_stat,
    z_poly_perms,
    z_total_perms,
)
from pasep2.qseries import QPoly
from pasep2.states import enumerate_ade_words
from pasep2.worked_examples import CLASS_MEMBERS, CLASS_SEED, SIGMA


@st.composite
def psps(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    values = draw(st.permutations(range(1, n + 1)))
    signs = draw(st.sets(st.integers(2, n))) if n > 1 else set()
    return PSP(tuple(values), frozenset(signs))


def test_worked_statistics():
    assert count_31_2(SIGMA) == 2
    assert count_31_bar2(SIGMA) == 3
    assert tw_stat(SIGMA) == 5
    assert gdes(SIGMA) == {6, 8}
    assert str(gc(SIGMA)) == "1|2|2,2,1"
    assert ade_of_psp(SIGMA) == "ADADEDE"


@given(psps())
def test_statistics_match_definition_oracle(s):
    assert tw_stat(s) == oracles.tw(s.values, s.signs)
    assert ade_of_psp(s) == oracles.genocchi_word(s.values, s.signs)


def test_signed_order():
    ordered = [SignedValue(1, False), SignedValue(2, True), SignedValue(2, False), SignedValue(3, True)]
    assert sorted(reversed(ordered)) == ordered
    assert SignedValue(2, True) < SignedValue(2, False) < SignedValue(3, True)


@pytest.mark.parametrize("n", range(1, 6))
def test_enumeration_size(n):
    perms = list(enumerate_psp(n))
    assert len(perms) == math.factorial(n) * 2 ** (n - 1)
    assert len(set(perms)) == len(perms)
    assert sorted(str(s) for s in enumerate_psp(2)) == ["1 2", "1 2~", "2 1", "2~ 1"]


@pytest.mark.parametrize("N", range(0, 5))
def test_z_poly_perms_matches_oracle_and_paths(N):
    buckets = {}
    for values in itertools.permutations(range(1, N + 2)):
        for k in range(N + 1):
            for signs in itertools.combinations(range(2, N + 2), k):
                w = oracles.genocchi_word(values, set(signs))
                buckets.setdefault(w, []).append(oracles.tw(values, set(signs)))
    for r in range(N + 1):
        for X in enumerate_ade_words(N, r):
            ws = buckets.get(X, [])
            assert z_poly_perms(X) == QPoly([ws.count(i) for i in range(max(ws) + 1)])
            assert z_poly_perms(X) == z_poly_paths(X)
        assert z_total_perms(N, r)(1) == math.comb(N, r) * math.factorial(N + 1)


def test_equivalence_class_example():
    assert {str(t) for t in equivalence_class(CLASS_SEED)} == CLASS_MEMBERS


@pytest.mark.parametrize("n", range(1, 6))
def test_equivalence_classes_partition(n):
    seen = set()
    for s in enumerate_psp(n):
        cls = equivalence_class(s)
        assert s in cls
        assert len(cls) == len(set(cls)) == math.factorial(s.r + 1)
        assert {str(gc(t)) for t in cls} == {str(gc(s))}
        assert all(set(equivalence_class(t)) == set(cls) for t in cls)
        seen.add(frozenset(cls))
    assert sum(len(c) for c in seen) == math.factorial(n) * 2 ** (n - 1)


@given(psps())
def test_text_and_json_round_trip(s):
    assert PSP.parse(str(s)) == s
    assert PSP.from_json(s.to_json()) == s


@pytest.mark.parametrize("values,signs", [((1, 1), ()), ((2, 1), (1,)), ((1, 2), (3,)), ((0,), ())])
def test_invalid_permutations(values, signs):
    with pytest.raises(ValueError):
        PSP(values, frozenset(signs))
