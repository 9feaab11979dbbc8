"""Marked Laguerre histories and marked large Laguerre histories.

A path is a sequence of :class:`Step`. Heights are never stored; they are
recomputed from the step kinds (rise +1, fall -1, either level 0).

Weight bounds for a step starting at height ``h``:

=================  ==============  ==============  ==============  ===============
kind               small unmarked  small marked    large unmarked  large marked
=================  ==============  ==============  ==============  ===============
rise / level       0 .. h          h .. 2h         0 .. h          h+1 .. 2h+1
fall / dashed      0 .. h-1        h .. 2h-1       0 .. h          h .. 2h
=================  ==============  ==============  ==============  ===============

In a small history the first step is never marked.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple, Sequence

from .qseries import QPoly, ZERO, div_exact, qfactorial
from .states import check_ade, enumerate_ade_words

RISE, FALL, LEVEL, DASHED = "R", "F", "L", "X"
KINDS = (RISE, LEVEL, DASHED, FALL)  # enumeration order
UP_KINDS = frozenset((RISE, LEVEL))  # labelled D
DOWN_KINDS = frozenset((FALL, DASHED))  # labelled E
_STEP_RE = re.compile(r"([RFLX])(\d+)(\*?)")
_DELTA = {RISE: 1, FALL: -1, LEVEL: 0, DASHED: 0}


class Step(NamedTuple):
    kind: str
    w: int = 0
    marked: bool = False

    def __repr__(self) -> str:
        return f"{self.kind}{self.w}{'*' if self.marked else ''}"


class NotARise(ValueError):
    pass


def weight_range(kind: str, h: int, marked: bool, large: bool) -> range:
    """Allowed weights for a step of ``kind`` starting at height ``h``."""
    up = kind in UP_KINDS
    if large:
        if not marked:
            return range(0, h + 1)
        return range(h + 1, 2 * h + 2) if up else range(h, 2 * h + 1)
    if not marked:
        return range(0, h + 1) if up else range(0, h)
    return range(h, 2 * h + 1) if up else range(h, 2 * h)


def mark_bonus(kind: str, h: int, large: bool) -> int:
    """Weight added when a step of ``kind`` at height ``h`` is marked."""
    if large and kind in UP_KINDS:
        return h + 1
    return h


def heights(steps: Sequence[Step]) -> list[int]:
    """Starting height of every step."""
    out, h = [], 0
    for s in steps:
        out.append(h)
        h += _DELTA[s.kind]
    return out


@dataclass(frozen=True)
class Validation:
    ok: bool
    index: int | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class History:
    """A (possibly marked) Laguerre history; ``large`` selects the large variant."""

    steps: tuple[Step, ...]
    large: bool = False

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(Step(*s) for s in self.steps))

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def __getitem__(self, i):
        return self.steps[i]

    @property
    def heights(self) -> list[int]:
        return heights(self.steps)

    @property
    def weights(self) -> tuple[int, ...]:
        return tuple(s.w for s in self.steps)

    @property
    def marked_positions(self) -> tuple[int, ...]:
        """0-based indices of the marked steps."""
        return tuple(i for i, s in enumerate(self.steps) if s.marked)

    def validate(self, open_ended: bool = False) -> Validation:
        return validate(self, open_ended=open_ended)

    def to_json(self) -> str:
        return json.dumps(
            [{"kind": s.kind, "w": s.w, "marked": s.marked} for s in self.steps]
        )

    @classmethod
    def from_json(cls, data, large: bool = False) -> History:
        if isinstance(data, str):
            data = json.loads(data)
        steps = []
        for item in data:
            kind = item["kind"]
            if kind not in KINDS:
                raise ValueError(f"unknown step kind {kind!r}")
            w = item["w"]
            if not isinstance(w, int) or isinstance(w, bool):
                raise ValueError("step weight must be an integer")
            steps.append(Step(kind, w, bool(item.get("marked", False))))
        return cls(tuple(steps), large)

    @classmethod
    def parse(cls, text: str, large: bool = False) -> History:
        """Inverse of ``str``: ``"R0 L1* F0"``, a trailing ``*`` marks a step."""
        steps = []
        for tok in text.split():
            m = _STEP_RE.fullmatch(tok)
            if not m:
                raise ValueError(f"bad step {tok!r}; expected e.g. R0, L1*, X2")
            steps.append(Step(m[1], int(m[2]), bool(m[3])))
        return cls(tuple(steps), large)

    def __str__(self) -> str:
        return " ".join(repr(s) for s in self.steps)


def validate(H: History, open_ended: bool = False) -> Validation:
    """Check every invariant of ``H``; the result names the first bad step.

    ``open_ended`` drops the return-to-zero requirement (prefix paths).
    """
    if not H.large and not H.steps:
        return Validation(False, None, "a Laguerre history has at least one step")
    h = 0
    for i, s in enumerate(H.steps):
        if s.kind not in _DELTA:
            return Validation(False, i, f"unknown kind {s.kind!r}")
        if i == 0 and s.marked and not H.large:
            return Validation(False, i, "first step cannot be marked")
        if s.w not in weight_range(s.kind, h, s.marked, H.large):
            return Validation(False, i, f"weight {s.w} out of range at height {h}")
        h += _DELTA[s.kind]
        if h < 0:
            return Validation(False, i, "path goes below the axis")
    if h != 0 and not open_ended:
        return Validation(False, len(H.steps) - 1, f"path ends at height {h}")
    return Validation(True)


def total_weight(H: History) -> int:
    return sum(s.w for s in H.steps)


def _letter(s: Step) -> str:
    if s.marked:
        return "A"
    return "D" if s.kind in UP_KINDS else "E"


def label(H: History) -> str:
    """Label of a marked Laguerre history: the first step's letter is dropped."""
    return "".join(_letter(s) for s in H.steps[1:])


def label_large(H: History) -> str:
    return "".join(_letter(s) for s in H.steps)


def _walk(word: str, large: bool, h: int = 0) -> Iterator[tuple[Step, ...]]:
    """Depth-first generation of all step sequences realising ``word`` from height ``h``."""
    n = len(word)
    prefix: list[Step] = []

    def rec(i: int, h: int):
        if h > n - i:
            return
        if i == n:
            if h == 0:
                yield tuple(prefix)
            return
        letter = word[i]
        marked = letter == "A"
        kinds = KINDS if marked else ((RISE, LEVEL) if letter == "D" else (DASHED, FALL))
        for kind in kinds:
            nh = h + _DELTA[kind]
            if nh < 0:
                continue
            for w in weight_range(kind, h, marked, large):
                prefix.append(Step(kind, w, marked))
                yield from rec(i + 1, nh)
                prefix.pop()

    yield from rec(0, h)


def enumerate_by_label(X: str, large: bool = False) -> Iterator[History]:
    """All marked histories with label ``X``.

    Small histories have size ``len(X) + 1`` (the unlabelled first step is a
    weight-0 rise or level step); large ones have size ``len(X)``.
    """
    check_ade(X)
    if large:
        for steps in _walk(X, True):
            yield History(steps, True)
        return
    for first in (Step(RISE), Step(LEVEL)):
        for rest in _walk(X, False, _DELTA[first.kind]):
            yield History((first, *rest), False)


def enumerate_histories(n: int, large: bool = False, r: int | None = None) -> Iterator[History]:
    """All marked (large) Laguerre histories of size ``n``, optionally with ``r`` marks."""
    length = n if large else n - 1
    if length < 0:
        return
    rs = range(length + 1) if r is None else [r]
    for rr in rs:
        for X in enumerate_ade_words(length, rr):
            yield from enumerate_by_label(X, large)


def _weight_poly(weights: Sequence[int]) -> QPoly:
    if not weights:
        return ZERO
    counts = [0] * (max(weights) + 1)
    for w in weights:
        counts[w] += 1
    return QPoly(counts)


@lru_cache(maxsize=None)
def z_poly_paths(X: str, large: bool = False) -> QPoly:
    """Generating polynomial of the weights of the histories labelled ``X``."""
    return _weight_poly([total_weight(H) for H in enumerate_by_label(X, large)])


def z_total_paths(N: int, r: int, large: bool = False) -> QPoly:
    total = ZERO
    for X in enumerate_ade_words(N, r):
        total = total + z_poly_paths(X, large)
    return total


@lru_cache(maxsize=None)
def m_n_k(n: int, k: int) -> QPoly:
    """Closed form for prefix paths of size ``n`` with ``n - 1`` marks ending at height ``k``."""
    if n < 1 or not 0 <= k <= n:
        raise ValueError("need n >= 1 and 0 <= k <= n")
    num = (qfactorial(n) ** 2).shift(k * (k - 1) // 2)
    return div_exact(num, qfactorial(n - k) * qfactorial(k))


def opposing_step(H: History | Sequence[Step], i: int) -> int:
    """Index of the fall that brings the rise at 0-based index ``i`` back to its level."""
    steps = H.steps if isinstance(H, History) else tuple(H)
    if steps[i].kind != RISE:
        raise NotARise(f"step {i} is {steps[i].kind!r}, not a rise")
    hs = heights(steps)
    target = hs[i] + 1
    for j in range(i + 1, len(steps)):
        if steps[j].kind == FALL and hs[j] == target:
            return j
    raise ValueError("no opposing step: the path is not a Motzkin path")

