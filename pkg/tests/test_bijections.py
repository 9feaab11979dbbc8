import itertools

import pytest

from pasep2.bijections import (
    fv,
    fv_inverse,
    induced_involution,
    iota_llh,
    marked_fv,
    marked_fv_inverse,
    psi,
    psi_inverse,
    psi_marked,
    psi_marked_inverse,
)
from pasep2.histories import History, enumerate_histories, label, label_large, total_weight, validate
from pasep2.permutations import PSP, ade_of_psp, enumerate_psp, tw_stat
from pasep2.states import iota_word
from pasep2 import worked_examples as wx


def test_worked_vectors():
    assert fv((2, 5, 7, 8, 3, 6, 4, 1)) == wx.LAGUERRE_8
    assert "".join(map(str, fv((2, 5, 7, 8, 3, 6, 4, 1)).weights)) == "00010100"
    assert fv_inverse(wx.LAGUERRE_8) == (2, 5, 7, 8, 3, 6, 4, 1)
    assert marked_fv(wx.SIGMA) == wx.MARKED_8
    assert marked_fv_inverse(wx.MARKED_8) == wx.SIGMA
    assert psi(wx.LAGUERRE_8) == wx.PSI_8
    assert psi_marked(wx.MARKED_8) == wx.PSI_MARKED_8
    assert iota_llh(wx.LARGE_MARKED_7) == wx.IOTA_IMAGE_7
    assert iota_llh(wx.IOTA_IMAGE_7) == wx.LARGE_MARKED_7
    assert label_large(wx.IOTA_IMAGE_7) == iota_word("ADADEEE") == "DDDEAEA"


@pytest.mark.parametrize("n", range(1, 7))
def test_fv_round_trip_and_weights(n):
    images = set()
    for perm in itertools.permutations(range(1, n + 1)):
        H = fv(perm)
        assert validate(H)
        assert fv_inverse(H) == perm
        # weight of step k counts the 31-2 patterns with k in the role of 2
        pos = {v: i for i, v in enumerate(perm)}
        for k, s in enumerate(H.steps, 1):
            j = pos[k]
            expected = sum(1 for i in range(j - 1) if perm[i] > k > perm[i + 1])
            assert s.w == expected
        images.add(H)
    assert images == {H for H in enumerate_histories(n) if not H.marked_positions}


@pytest.mark.parametrize("n", range(1, 6))
def test_marked_fv_is_a_bijection_preserving_statistics(n):
    images = set()
    for s in enumerate_psp(n):
        H = marked_fv(s)
        assert validate(H)
        assert marked_fv_inverse(H) == s
        assert total_weight(H) == tw_stat(s)
        assert label(H) == ade_of_psp(s)
        images.add(H)
    assert images == set(enumerate_histories(n))


@pytest.mark.parametrize("n", range(2, 7))
def test_psi_height_shift_and_round_trip(n):
    for H in enumerate_histories(n):
        if H.marked_positions:
            continue
        P = psi(H)
        assert validate(P)
        assert psi_inverse(P) == H
        hs, hp = H.heights, P.heights
        for i in range(n - 1):
            drop = 0 if H.steps[i].kind in "RL" else 1
            assert hp[i] == hs[i] - drop, (str(H), i)


@pytest.mark.parametrize("n", range(1, 7))
def test_psi_marked_is_a_bijection_preserving_label_and_weight(n):
    # label length n - 1 <= 5
    images = set()
    for H in enumerate_histories(n):
        P = psi_marked(H)
        assert validate(P)
        assert psi_marked_inverse(P) == H
        assert label_large(P) == label(H)
        assert total_weight(P) == total_weight(H)
        images.add(P)
    assert images == set(enumerate_histories(n - 1, large=True))


@pytest.mark.parametrize("n", range(0, 6))
def test_iota_is_a_label_reversing_involution(n):
    for H in enumerate_histories(n, large=True):
        img = iota_llh(H)
        assert validate(img)
        assert iota_llh(img) == H
        assert label_large(img) == iota_word(label_large(H))
        assert total_weight(img) == total_weight(H)


@pytest.mark.parametrize("n", range(1, 6))
def test_induced_involution(n):
    for H in enumerate_histories(n):
        img = induced_involution(H)
        assert validate(img)
        assert induced_involution(img) == H
        assert label(img) == iota_word(label(H))
        assert total_weight(img) == total_weight(H)


def test_inverse_maps_reject_bad_input():
    with pytest.raises(ValueError):
        fv_inverse(History.parse("R0 L0"))  # does not close
    with pytest.raises(ValueError):
        fv_inverse(wx.MARKED_8)
    with pytest.raises(ValueError):
        psi(wx.MARKED_8)
    with pytest.raises(ValueError):
        iota_llh(wx.MARKED_8)
    with pytest.raises(ValueError):
        psi(History(()))
