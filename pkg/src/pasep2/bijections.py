"""Maps between permutations, Laguerre histories and large Laguerre histories.

* :func:`fv` / :func:`fv_inverse` -- Françon-Viennot bijection.
* :func:`marked_fv` / :func:`marked_fv_inverse` -- its extension to
  partially signed permutations and marked histories.
* :func:`psi` / :func:`psi_inverse`, :func:`psi_marked` /
  :func:`psi_marked_inverse` -- histories of size n to large histories of
  size n - 1.
* :func:`iota_llh` -- particle-hole involution on marked large histories.
* :func:`induced_involution` -- the same involution transported to marked
  Laguerre histories.

Step indices are 0-based throughout.
"""

from __future__ import annotations

from typing import Sequence

from .histories import (
    DASHED,
    FALL,
    LEVEL,
    RISE,
    UP_KINDS,
    History,
    Step,
    heights,
    mark_bonus,
    opposing_step,
)
from .permutations import PSP, PartiallySignedPermutation

_HOLE = None
_SWAP_LEVEL = {LEVEL: DASHED, DASHED: LEVEL, RISE: RISE, FALL: FALL}
_REVERSE = {RISE: FALL, FALL: RISE, LEVEL: LEVEL, DASHED: DASHED}


def _as_values(sigma) -> tuple[int, ...]:
    if isinstance(sigma, PartiallySignedPermutation):
        return sigma.values
    return tuple(sigma)


def fv(sigma: Sequence[int] | PSP) -> History:
    """Françon-Viennot: step k classifies value k against its neighbours.

    Boundary convention ``sigma_0 = 0`` and ``sigma_{n+1} = n + 1``; the weight
    of step k counts the 31-2 occurrences in which k plays the role of 2.
    """
    values = _as_values(sigma)
    n = len(values)
    padded = (0, *values, n + 1)
    pos = {v: j for j, v in enumerate(padded)}
    descents = [(values[i], values[i + 1], i) for i in range(n - 1) if values[i] > values[i + 1]]
    steps = []
    for k in range(1, n + 1):
        j = pos[k]
        left, right = padded[j - 1], padded[j + 1]
        if left > k < right:
            kind = RISE
        elif left < k > right:
            kind = FALL
        elif left < k < right:
            kind = LEVEL
        else:
            kind = DASHED
        # descent at 0-based (i, i+1) must end before k's 0-based index j - 1
        w = sum(1 for a, b, i in descents if a > k > b and i + 1 < j - 1)
        steps.append(Step(kind, w))
    return History(tuple(steps))


def fv_inverse(H: History) -> tuple[int, ...]:
    """Insert 1..n into a word of hole markers, one value per step."""
    word: list[int | None] = [_HOLE]
    for k, s in enumerate(H.steps, 1):
        if s.marked:
            raise ValueError("fv_inverse expects an unmarked history")
        holes = [i for i, x in enumerate(word) if x is _HOLE]
        if s.w >= len(holes):
            raise ValueError(f"weight {s.w} exceeds the {len(holes)} available holes")
        i = holes[s.w]
        if s.kind == RISE:
            repl = [_HOLE, k, _HOLE]
        elif s.kind == LEVEL:
            repl = [k, _HOLE]
        elif s.kind == DASHED:
            repl = [_HOLE, k]
        else:
            repl = [k]
        word[i : i + 1] = repl
    if word.count(_HOLE) != 1 or word[-1] is not _HOLE:
        raise ValueError("history does not close: expected exactly one trailing hole")
    return tuple(word[:-1])


def marked_fv(sigma: PSP) -> History:
    """Françon-Viennot on the underlying permutation, then mark step k for each k~."""
    H = fv(sigma.values)
    hs = H.heights
    steps = list(H.steps)
    for k in sigma.signs:
        s = steps[k - 1]
        steps[k - 1] = Step(s.kind, s.w + hs[k - 1], True)
    return History(tuple(steps))


def _unmark_small(H: History) -> tuple[History, list[int]]:
    hs = H.heights
    steps, marks = [], []
    for i, s in enumerate(H.steps):
        if s.marked:
            marks.append(i)
            steps.append(Step(s.kind, s.w - hs[i]))
        else:
            steps.append(s)
    return History(tuple(steps)), marks


def marked_fv_inverse(H: History) -> PSP:
    plain, marks = _unmark_small(H)
    values = fv_inverse(plain)
    return PSP(values, frozenset(i + 1 for i in marks))


# Psi table: the row class of H_i is {R, X} or {F, L}; the column class of
# H_{i+1} is up {R, L} or down {F, X}.
_PSI_ROW_RX = frozenset((RISE, DASHED))
_PSI_TABLE = {
    (True, True): RISE,
    (True, False): DASHED,
    (False, True): LEVEL,
    (False, False): FALL,
}
_PSI_INV = {v: k for k, v in _PSI_TABLE.items()}


def psi(H: History) -> History:
    """Laguerre history of size n to large Laguerre history of size n - 1; weights are kept."""
    if H.large or not H.steps:
        raise ValueError("psi expects a non-empty Laguerre history")
    steps = H.steps
    out = []
    for a, b in zip(steps, steps[1:]):
        if a.marked or b.marked:
            raise ValueError("psi expects an unmarked history; use psi_marked")
        kind = _PSI_TABLE[(a.kind in _PSI_ROW_RX, b.kind in UP_KINDS)]
        out.append(Step(kind, a.w))
    return History(tuple(out), large=True)


def psi_inverse(H: History) -> History:
    """Large Laguerre history of size n to Laguerre history of size n + 1."""
    n = len(H.steps)
    # row class of each H_i for i < n + 1, column class of each H_{i+1}
    rows = [_PSI_INV[s.kind][0] for s in H.steps]
    cols = [_PSI_INV[s.kind][1] for s in H.steps]
    # first step is up-class; last step is a fall or level step (row class F/L)
    up = [True, *cols]
    row = [*rows, False]
    out = []
    for i in range(n + 1):
        kind = _PSI_TABLE[(row[i], up[i])]
        w = H.steps[i].w if i < n else 0
        out.append(Step(kind, w))
    return History(tuple(out))


def psi_marked(H: History) -> History:
    """Marked Laguerre history of size n to marked large Laguerre history of size n - 1.

    Unmark, apply :func:`psi`, mark step k - 1 for every marked step k, and
    exchange the two level kinds on the newly marked steps.
    """
    plain, marks = _unmark_small(H)
    base = psi(plain)
    hs = base.heights
    steps = list(base.steps)
    for k in marks:
        s = steps[k - 1]
        kind = _SWAP_LEVEL[s.kind]
        steps[k - 1] = Step(kind, s.w + mark_bonus(kind, hs[k - 1], large=True), True)
    return History(tuple(steps), large=True)


def _unmark_large(H: History) -> tuple[list[Step], list[int]]:
    """Strip marks from a large history, undoing the level-kind exchange."""
    hs = H.heights
    steps, marks = [], []
    for i, s in enumerate(H.steps):
        if s.marked:
            marks.append(i)
            steps.append(Step(_SWAP_LEVEL[s.kind], s.w - mark_bonus(s.kind, hs[i], large=True)))
        else:
            steps.append(s)
    return steps, marks


def psi_marked_inverse(H: History) -> History:
    steps, marks = _unmark_large(H)
    base = psi_inverse(History(tuple(steps), large=True))
    hs = base.heights
    out = list(base.steps)
    for j in marks:
        s = out[j + 1]
        out[j + 1] = Step(s.kind, s.w + hs[j + 1], True)
    return History(tuple(out))


def iota_llh(H: History) -> History:
    """Particle-hole involution on marked large Laguerre histories.

    1. unmark; 2. reverse (rises become falls); 3. exchange the weights of
    every rise and its opposing fall; 4. re-mark at the mirrored positions;
    5. exchange the unmarked level kinds.
    """
    if not H.large:
        raise ValueError("iota_llh expects a large history")
    n = len(H.steps)
    steps, marks = _unmark_large(H)
    rev = [Step(_REVERSE[s.kind], s.w) for s in reversed(steps)]
    for i, s in enumerate(rev):
        if s.kind == RISE:
            j = opposing_step(rev, i)
            rev[i], rev[j] = Step(RISE, rev[j].w), Step(FALL, s.w)
    hs = heights(rev)
    mirrored = {n - 1 - i for i in marks}
    out = []
    for i, s in enumerate(rev):
        if i in mirrored:
            kind = _SWAP_LEVEL[s.kind]
            out.append(Step(kind, s.w + mark_bonus(kind, hs[i], large=True), True))
        else:
            out.append(Step(_SWAP_LEVEL[s.kind], s.w))
    return History(tuple(out), large=True)


def induced_involution(H: History) -> History:
    """``psi_marked_inverse . iota_llh . psi_marked`` on marked Laguerre histories."""
    return psi_marked_inverse(iota_llh(psi_marked(H)))
