"""Partially signed permutations: permutations of 1..n with overlines on values >= 2.

Text form: space-separated values, overlined values carry a trailing ``~``,
e.g. ``"2~ 5 7 8 3 6 4~ 1"``.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import lru_cache, total_ordering
from typing import Iterator

from .qseries import QPoly, ZERO
from .states import SegComposition, check_ade, segcomp_to_ade


@total_ordering
@dataclass(frozen=True)
class SignedValue:
    """A value compared with the order 1~ < 1 < 2~ < 2 < ..."""

    magnitude: int
    overlined: bool = False

    def _key(self) -> tuple[int, int]:
        return (self.magnitude, 0 if self.overlined else 1)

    def __lt__(self, other: SignedValue) -> bool:
        return self._key() < other._key()

    def __str__(self) -> str:
        return f"{self.magnitude}~" if self.overlined else str(self.magnitude)


@dataclass(frozen=True)
class PartiallySignedPermutation:
    values: tuple[int, ...]
    signs: frozenset[int] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        object.__setattr__(self, "signs", frozenset(self.signs))
        n = len(self.values)
        if n < 1 or sorted(self.values) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.values}")
        if 1 in self.signs:
            raise ValueError("the value 1 cannot be overlined")
        if not self.signs <= set(self.values):
            raise ValueError("overlined values must occur in the permutation")

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def r(self) -> int:
        return len(self.signs)

    def signed(self) -> list[SignedValue]:
        return [SignedValue(v, v in self.signs) for v in self.values]

    def __len__(self) -> int:
        return len(self.values)

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.signed())

    @classmethod
    def parse(cls, text: str) -> PartiallySignedPermutation:
        values, signs = [], set()
        for tok in text.split():
            bare = tok.rstrip("~")
            if not bare.isdigit() or len(tok) - len(bare) > 1:
                raise ValueError(f"bad permutation token {tok!r}")
            v = int(bare)
            values.append(v)
            if tok.endswith("~"):
                signs.add(v)
        return cls(tuple(values), frozenset(signs))

    def to_json(self) -> str:
        return json.dumps({"values": list(self.values), "signs": sorted(self.signs)})

    @classmethod
    def from_json(cls, data) -> PartiallySignedPermutation:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(tuple(data["values"]), frozenset(data.get("signs", ())))


PSP = PartiallySignedPermutation


def count_31_2(sigma: PSP) -> int:
    """Occurrences ``s_i s_{i+1} - s_j`` with ``j > i + 1`` and ``s_i > s_j > s_{i+1}``."""
    s = sigma.signed()
    n = len(s)
    return sum(
        1
        for i in range(n - 1)
        if s[i] > s[i + 1]
        for j in range(i + 2, n)
        if s[i] > s[j] > s[i + 1]
    )


def count_31_bar2(sigma: PSP) -> int:
    """Pairs (descent ``s_i s_{i+1}``, overlined ``k~``) with ``s_i >= k~ > s_{i+1}``.

    ``k~`` may sit anywhere, including inside the descent itself.
    """
    s = sigma.signed()
    bars = [SignedValue(k, True) for k in sigma.signs]
    return sum(
        1
        for i in range(len(s) - 1)
        if s[i] > s[i + 1]
        for k in bars
        if s[i] >= k > s[i + 1]
    )


def tw_stat(sigma: PSP) -> int:
    return count_31_2(sigma) + count_31_bar2(sigma)


def gdes(sigma: PSP) -> frozenset[int]:
    """Unsigned values immediately followed by a smaller value."""
    s = sigma.signed()
    return frozenset(
        s[j].magnitude
        for j in range(len(s) - 1)
        if not s[j].overlined and s[j] > s[j + 1]
    )


def gc(sigma: PSP) -> SegComposition:
    """Genocchi composition of descents, a segmented composition of ``n``."""
    return SegComposition.from_sets(
        sigma.n, {d - 1 for d in gdes(sigma)}, {s - 1 for s in sigma.signs}
    )


def ade_of_psp(sigma: PSP) -> str:
    return segcomp_to_ade(gc(sigma))


def enumerate_psp(n: int, r: int | None = None) -> Iterator[PSP]:
    """All of B'_n, or those with exactly ``r`` overlined values."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if r is not None and not 0 <= r <= n - 1:
        raise ValueError("need 0 <= r <= n - 1")
    rs = range(n) if r is None else [r]
    for perm in itertools.permutations(range(1, n + 1)):
        for rr in rs:
            for signs in itertools.combinations(range(2, n + 1), rr):
                yield PSP(perm, frozenset(signs))


@lru_cache(maxsize=None)
def _z_table(n: int) -> dict[str, QPoly]:
    buckets: dict[str, list[int]] = {}
    for sigma in enumerate_psp(n):
        buckets.setdefault(ade_of_psp(sigma), []).append(tw_stat(sigma))
    out = {}
    for word, ws in buckets.items():
        counts = [0] * (max(ws) + 1)
        for w in ws:
            counts[w] += 1
        out[word] = QPoly(counts)
    return out


def z_poly_perms(X: str) -> QPoly:
    """Sum of ``q^tw`` over permutations of size ``len(X) + 1`` whose GC word is ``X``."""
    check_ade(X)
    return _z_table(len(X) + 1).get(X, ZERO)


def z_total_perms(N: int, r: int) -> QPoly:
    total = ZERO
    for word, p in _z_table(N + 1).items():
        if word.count("A") == r:
            total = total + p
    return total


def _factors(sigma: PSP) -> tuple[list[tuple[int, ...]], tuple[int, ...]]:
    cuts = [i for i, v in enumerate(sigma.values) if v == 1 or v in sigma.signs]
    blocks, start = [], 0
    for c in cuts:
        blocks.append(sigma.values[start : c + 1])
        start = c + 1
    return blocks, sigma.values[start:]


def equivalence_class(sigma: PSP) -> list[PSP]:
    """Rearrangements of the factors ending at overlined values and at 1.

    The trailing factor stays in place, so the class has ``(r + 1)!`` members.
    """
    blocks, tail = _factors(sigma)
    out = []
    for order in itertools.permutations(blocks):
        values = tuple(itertools.chain(*order, tail))
        out.append(PSP(values, sigma.signs))
    return out
