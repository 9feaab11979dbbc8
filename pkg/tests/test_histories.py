import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from pasep2.histories import (
    NotARise,
    History,
    Step,
    enumerate_by_label,
    enumerate_histories,
    label,
    label_large,
    m_n_k,
    opposing_step,
    total_weight,
    validate,
    z_poly_paths,
    z_total_paths,
)
from pasep2.qseries import QPoly, qfactorial
from pasep2.states import enumerate_ade_words
from pasep2.worked_examples import LARGE_MARKED_7, LAGUERRE_8, MARKED_8, OPPOSING_10


def as_tuples(H):
    return tuple((s.kind, s.w, s.marked) for s in H.steps)


@pytest.mark.parametrize("n,large", [(n, False) for n in range(1, 7)] + [(n, True) for n in range(0, 6)])
def test_generator_matches_brute_force(n, large):
    ours = [as_tuples(H) for H in enumerate_histories(n, large=large)]
    assert len(ours) == len(set(ours))
    assert set(ours) == set(oracles.all_paths(n, large))


@pytest.mark.parametrize("n,large", [(5, False), (6, False), (4, True), (5, True)])
def test_validate_agrees_with_brute_force(n, large):
    # every oracle path validates; every single-weight perturbation is judged consistently
    valid = set(oracles.all_paths(n, large))
    for p in list(valid)[:400]:
        H = History(tuple(Step(*s) for s in p), large)
        assert validate(H)
        for i in range(n):
            for dw in (-1, 1):
                q = list(p)
                k, w, m = q[i]
                q[i] = (k, w + dw, m)
                H2 = History(tuple(Step(*s) for s in q), large)
                assert bool(validate(H2)) == (tuple(q) in valid)


@pytest.mark.parametrize("N", range(0, 6))
def test_z_poly_paths_matches_oracle(N):
    small = oracles.z_by_label(N + 1, large=False)
    for r in range(N + 1):
        for X in enumerate_ade_words(N, r):
            expected = QPoly(oracles.counter_to_coeffs(small.get(X, {})))
            assert z_poly_paths(X) == expected


@pytest.mark.parametrize("N", range(0, 6))
def test_total_counts(N):
    for r in range(N + 1):
        assert z_total_paths(N, r)(1) == math.comb(N, r) * math.factorial(N + 1)
        assert z_total_paths(N, r, large=True)(1) == math.comb(N, r) * math.factorial(N + 1)


@pytest.mark.parametrize("r", range(0, 6))
def test_all_gray_closed_form(r):
    assert z_total_paths(r, r) == qfactorial(r + 1)


@pytest.mark.parametrize("n", range(1, 7))
def test_m_n_k_matches_prefix_enumeration(n):
    # prefix paths of size n: first step unmarked, the other n - 1 marked
    by_end = {}
    for p in oracles.all_paths(n, large=False, open_ended=True):
        if all(m for _, _, m in p[1:]):
            h = sum(oracles.STEP[k] for k, _, _ in p)
            by_end.setdefault(h, []).append(sum(w for _, w, _ in p))
    for k in range(n + 1):
        ws = by_end.get(k, [])
        counts = [ws.count(i) for i in range(max(ws) + 1)] if ws else []
        assert m_n_k(n, k) == QPoly(counts), (n, k)


def test_m_n_k_small_values():
    assert m_n_k(1, 0) == QPoly([1])
    assert m_n_k(1, 1) == QPoly([1])
    assert m_n_k(2, 2) == QPoly([0, 1, 1])  # R0 then a marked rise of weight 1 or 2


def test_worked_paths():
    assert validate(MARKED_8)
    assert total_weight(MARKED_8) == 5
    assert label(MARKED_8) == "ADADEDE"
    assert "".join(map(str, LAGUERRE_8.weights)) == "00010100"
    assert validate(LARGE_MARKED_7)
    assert label_large(LARGE_MARKED_7) == "ADADEEE"


def test_opposing_steps():
    assert opposing_step(OPPOSING_10, 4) == 8
    assert opposing_step(OPPOSING_10, 0) == 9
    assert opposing_step(OPPOSING_10, 1) == 2
    with pytest.raises(NotARise):
        opposing_step(OPPOSING_10, 2)


@pytest.mark.parametrize("n", range(1, 6))
def test_opposing_steps_pair_up_rises_and_falls(n):
    for H in enumerate_histories(n, large=True):
        rises = [i for i, s in enumerate(H.steps) if s.kind == "R"]
        targets = [opposing_step(H, i) for i in rises]
        assert len(set(targets)) == len(rises)
        hs = H.heights
        for i, j in zip(rises, targets):
            assert H.steps[j].kind == "F" and j > i
            assert hs[j] == hs[i] + 1
            assert all(hs[t] > hs[i] for t in range(i + 1, j + 1))


@pytest.mark.parametrize("X", ["", "A", "DE", "ADE", "DDEE", "AAD"])
def test_enumerate_by_label_labels(X):
    for H in enumerate_by_label(X):
        assert label(H) == X and validate(H)
    for H in enumerate_by_label(X, large=True):
        assert label_large(H) == X and validate(H)


def test_validation_reports_first_bad_step():
    v = validate(History.parse("R0 F1"))
    assert not v and v.index == 1
    v = validate(History.parse("L0* F0"))
    assert not v and v.index == 0
    v = validate(History.parse("R0 R1"))
    assert not v and "height" in v.reason
    assert not validate(History(()))
    assert validate(History((), large=True))


steps = st.builds(Step, st.sampled_from("RFLX"), st.integers(0, 9), st.booleans())


@given(st.lists(steps, max_size=8), st.booleans())
def test_json_and_text_round_trip(ss, large):
    H = History(tuple(ss), large)
    assert History.from_json(H.to_json(), large=large) == H
    assert History.parse(str(H), large=large) == H


def test_parse_rejects_garbage():
    for bad in ("Q0", "R", "R-1", "R0**"):
        with pytest.raises(ValueError):
            History.parse(bad)
    with pytest.raises(ValueError):
        History.from_json('[{"kind": "Z", "w": 0}]')
