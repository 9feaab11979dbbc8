"""2-PASEP configurations, ADE words and segmented compositions.

A state is a string over ``o`` (hole), ``b`` (black particle) and ``g`` (gray
particle). ADE words are plain strings over ``A``, ``D``, ``E``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

HOLE, BLACK, GRAY = "o", "b", "g"
STATE_LETTERS = HOLE + BLACK + GRAY

_STATE_TO_ADE = {HOLE: "E", BLACK: "D", GRAY: "A"}
_ADE_TO_STATE = {v: k for k, v in _STATE_TO_ADE.items()}
_SWAP_DE = str.maketrans("DE", "ED")
_SWAP_OB = str.maketrans("ob", "bo")


def check_state(x: str) -> str:
    if not x or any(c not in STATE_LETTERS for c in x):
        raise ValueError(f"invalid state {x!r}: expected a non-empty word over 'o', 'b', 'g'")
    return x


def check_ade(w: str) -> str:
    if any(c not in "ADE" for c in w):
        raise ValueError(f"invalid ADE word {w!r}")
    return w


def ade_of_state(x: str) -> str:
    check_state(x)
    return "".join(_STATE_TO_ADE[c] for c in x)


def state_of_ade(w: str) -> str:
    check_ade(w)
    return "".join(_ADE_TO_STATE[c] for c in w)


def iota_word(w: str) -> str:
    """Reverse the word and exchange D and E; A is fixed."""
    return check_ade(w)[::-1].translate(_SWAP_DE)


def iota_state(x: str) -> str:
    """Particle-hole map on states: reverse, exchange holes and black particles."""
    return check_state(x)[::-1].translate(_SWAP_OB)


def enumerate_ade_words(N: int, r: int) -> list[str]:
    """All words of length ``N`` with exactly ``r`` letters A, in lexicographic order."""
    if not 0 <= r <= N:
        raise ValueError("need 0 <= r <= N")
    return ["".join(t) for t in itertools.product("ADE", repeat=N) if t.count("A") == r]


def enumerate_states(N: int, r: int) -> list[str]:
    return [state_of_ade(w) for w in enumerate_ade_words(N, r)]


BAR, COMMA = "|", ","


@dataclass(frozen=True)
class SegComposition:
    """Composition whose parts are separated by bars (segmentation) or commas (descent)."""

    parts: tuple[int, ...]
    separators: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        object.__setattr__(self, "separators", tuple(self.separators))
        if not self.parts or any(p < 1 for p in self.parts):
            raise ValueError("parts must be positive and non-empty")
        if len(self.separators) != len(self.parts) - 1:
            raise ValueError("need exactly one separator between consecutive parts")
        if any(s not in (BAR, COMMA) for s in self.separators):
            raise ValueError("separators must be '|' or ','")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def _cuts(self, sep: str) -> frozenset[int]:
        acc, out = 0, set()
        for p, s in zip(self.parts, self.separators):
            acc += p
            if s == sep:
                out.add(acc)
        return frozenset(out)

    @property
    def des(self) -> frozenset[int]:
        return self._cuts(COMMA)

    @property
    def seg(self) -> frozenset[int]:
        return self._cuts(BAR)

    @classmethod
    def from_sets(cls, n: int, des, seg) -> SegComposition:
        des, seg = set(des), set(seg)
        if des & seg:
            raise ValueError("descent and segmentation sets must be disjoint")
        if not all(0 < i < n for i in des | seg):
            raise ValueError("cut points must lie in 1..n-1")
        cuts = sorted(des | seg)
        bounds = [0, *cuts, n]
        parts = [b - a for a, b in zip(bounds, bounds[1:])]
        seps = [COMMA if c in des else BAR for c in cuts]
        return cls(tuple(parts), tuple(seps))

    def __str__(self) -> str:
        out = [str(self.parts[0])]
        for s, p in zip(self.separators, self.parts[1:]):
            out.append(s + str(p))
        return "".join(out)

    @classmethod
    def parse(cls, text: str) -> SegComposition:
        text = text.strip().strip("()")
        if not re.fullmatch(r"[1-9]\d*([|,][1-9]\d*)*", text):
            raise ValueError(f"not a segmented composition: {text!r}")
        parts = [int(t) for t in re.split(r"[|,]", text)]
        seps = re.findall(r"[|,]", text)
        return cls(tuple(parts), tuple(seps))


def segcomp_to_ade(comp: SegComposition) -> str:
    des, seg = comp.des, comp.seg
    return "".join(
        "E" if i in des else "A" if i in seg else "D" for i in range(1, comp.size)
    )


def ade_to_segcomp(w: str) -> SegComposition:
    check_ade(w)
    n = len(w) + 1
    des = {i for i, c in enumerate(w, 1) if c == "E"}
    seg = {i for i, c in enumerate(w, 1) if c == "A"}
    return SegComposition.from_sets(n, des, seg)


def enumerate_segcomps(n: int) -> list[SegComposition]:
    return [ade_to_segcomp("".join(t)) for t in itertools.product("ADE", repeat=n - 1)]
