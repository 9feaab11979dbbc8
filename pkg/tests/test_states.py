import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from pasep2.states import (
    SegComposition,
    ade_of_state,
    ade_to_segcomp,
    enumerate_ade_words,
    enumerate_segcomps,
    enumerate_states,
    iota_state,
    iota_word,
    segcomp_to_ade,
    state_of_ade,
)

words = st.text(alphabet="ADE", max_size=10)
state_strings = st.text(alphabet="obg", min_size=1, max_size=10)


@given(state_strings)
def test_state_word_round_trip(x):
    assert state_of_ade(ade_of_state(x)) == x


@given(state_strings)
def test_iota_commutes_with_encoding(x):
    assert ade_of_state(iota_state(x)) == iota_word(ade_of_state(x))
    assert iota_state(iota_state(x)) == x


def test_examples():
    assert ade_of_state("bgo") == "DAE"
    assert iota_word("ADADEEE") == "DDDEAEA"
    c = SegComposition.parse("1|2|1,2,2")
    assert c.des == {4, 6} and c.seg == {1, 3}
    assert segcomp_to_ade(c) == "ADAEDED"
    assert segcomp_to_ade(SegComposition.parse("(1|2|2,2,1)")) == "ADADEDE"


@pytest.mark.parametrize("n", range(1, 10))
def test_segcomps_match_independent_generator(n):
    ours = sorted(str(c) for c in enumerate_segcomps(n))
    assert ours == oracles.segmented_compositions(n)
    assert len(ours) == 3 ** (n - 1)


@given(words)
def test_segcomp_round_trip(w):
    c = ade_to_segcomp(w)
    assert c.size == len(w) + 1
    assert segcomp_to_ade(c) == w
    assert SegComposition.parse(str(c)) == c


@pytest.mark.parametrize("N", range(0, 6))
def test_word_and_state_enumeration_counts(N):
    from math import comb

    for r in range(N + 1):
        ws = enumerate_ade_words(N, r)
        assert len(ws) == comb(N, r) * 2 ** (N - r)
        assert ws == sorted(set(ws))
        assert all(w.count("A") == r for w in ws)
        if N:
            assert enumerate_states(N, r) == [state_of_ade(w) for w in ws]


@pytest.mark.parametrize("bad", ["", "1||2", "0|1", "1;2", "a"])
def test_segcomp_parse_rejects(bad):
    with pytest.raises(ValueError):
        SegComposition.parse(bad)


def test_bad_letters_rejected():
    with pytest.raises(ValueError):
        ade_of_state("bxo")
    with pytest.raises(ValueError):
        iota_word("ADQ")
    with pytest.raises(ValueError):
        SegComposition.from_sets(4, {1}, {1})
