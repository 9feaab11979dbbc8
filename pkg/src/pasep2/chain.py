"""Explicit 2-PASEP Markov chain on a fixed gray-count sector, solved exactly.

Every rule moves one particle, so the number of gray particles is conserved
and each sector ``(N, r)`` is its own chain.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from fractions import Fraction

import networkx as nx
import numpy as np

from .states import BLACK, GRAY, HOLE, enumerate_states

_SWAPS_FORWARD = {
    (BLACK, HOLE): (HOLE, BLACK),
    (GRAY, HOLE): (HOLE, GRAY),
    (BLACK, GRAY): (GRAY, BLACK),
}


class InvalidParams(ValueError):
    pass


class Reducible(RuntimeError):
    def __init__(self, classes: list[list[str]]):
        self.classes = classes
        super().__init__(f"{len(classes)} closed classes; stationary law is not unique")


@dataclass(frozen=True)
class ChainModel:
    N: int
    r: int
    q: Fraction
    states: tuple[str, ...]
    P: tuple[tuple[Fraction, ...], ...]

    def index(self, x: str) -> int:
        return self.states.index(x)

    def prob(self, x: str, y: str) -> Fraction:
        return self.P[self.index(x)][self.index(y)]


def transitions(x: str, q: Fraction) -> dict[str, Fraction]:
    """Off-diagonal transition probabilities out of state ``x``."""
    N = len(x)
    rate = Fraction(1, N + 1)
    out: dict[str, Fraction] = {}

    def add(y: str, p: Fraction):
        if p:
            out[y] = out.get(y, Fraction(0)) + p

    for i in range(N - 1):
        pair = (x[i], x[i + 1])
        for fwd, back in _SWAPS_FORWARD.items():
            if pair == fwd:
                add(x[:i] + "".join(back) + x[i + 2 :], rate)
            elif pair == back:
                add(x[:i] + "".join(fwd) + x[i + 2 :], q * rate)
    if x[0] == HOLE:
        add(BLACK + x[1:], rate)
    if x[-1] == BLACK:
        add(x[:-1] + HOLE, rate)
    return out


def build_chain(N: int, r: int, q) -> ChainModel:
    q = Fraction(q)
    if N < 1 or not 0 <= r <= N:
        raise InvalidParams(f"need N >= 1 and 0 <= r <= N, got N={N}, r={r}")
    if not 0 <= q <= 1:
        raise InvalidParams(f"need 0 <= q <= 1, got {q}")
    states = tuple(enumerate_states(N, r))
    idx = {x: i for i, x in enumerate(states)}
    rows = []
    for x in states:
        row = [Fraction(0)] * len(states)
        for y, p in transitions(x, q).items():
            row[idx[y]] = p
        row[idx[x]] = 1 - sum(row)
        rows.append(tuple(row))
    return ChainModel(N, r, q, states, tuple(rows))


def closed_classes(M: ChainModel) -> list[list[str]]:
    """Recurrent classes: strongly connected components with no exit."""
    g = nx.DiGraph()
    g.add_nodes_from(range(len(M.states)))
    for i, row in enumerate(M.P):
        for j, p in enumerate(row):
            if p and i != j:
                g.add_edge(i, j)
    cond = nx.condensation(g)
    out = []
    for c in cond.nodes:
        if cond.out_degree(c) == 0:
            members = sorted(cond.nodes[c]["members"])
            out.append([M.states[i] for i in members])
    return out


def solve_exact(A: list[list[Fraction]], b: list[Fraction]) -> list[Fraction]:
    """Gauss-Jordan elimination over the rationals; ``A`` must be square and regular."""
    n = len(A)
    M = [list(row) + [bi] for row, bi in zip(A, b)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular system")
        M[col], M[piv] = M[piv], M[col]
        inv = 1 / M[col][col]
        M[col] = [v * inv for v in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [a - f * c for a, c in zip(M[r], M[col])]
    return [M[i][n] for i in range(n)]


def stationary_exact(M: ChainModel) -> dict[str, Fraction]:
    """Exact stationary law; raises :class:`Reducible` if it is not unique."""
    classes = closed_classes(M)
    if len(classes) != 1:
        raise Reducible(classes)
    n = len(M.states)
    # (P^T - I) pi = 0 with the last equation replaced by sum(pi) = 1
    A = [[M.P[j][i] - (1 if i == j else 0) for j in range(n)] for i in range(n)]
    b = [Fraction(0)] * n
    A[-1] = [Fraction(1)] * n
    b[-1] = Fraction(1)
    pi = solve_exact(A, b)
    return dict(zip(M.states, pi))


@dataclass
class LumpingReport:
    N: int
    r: int
    checked: int = 0
    failures: list[str] | None = None

    @property
    def ok(self) -> bool:
        return not self.failures


def lumping_check_q1(N: int, r: int) -> LumpingReport:
    """At q = 1, check ``P(x) = C(N, r)^-1 * sum_y P_0(y)`` for every state of the sector.

    ``y`` runs over the gray-free states that agree with ``x`` off the gray sites.
    """
    full = stationary_exact(build_chain(N, r, 1))
    base = stationary_exact(build_chain(N, 0, 1))
    rep = LumpingReport(N, r, failures=[])
    for x, p in full.items():
        grays = [i for i, c in enumerate(x) if c == GRAY]
        total = Fraction(0)
        for mask in range(1 << len(grays)):
            y = list(x)
            for bit, i in enumerate(grays):
                y[i] = BLACK if mask >> bit & 1 else HOLE
            total += base["".join(y)]
        rep.checked += 1
        if p != total / math.comb(N, r):
            rep.failures.append(x)
    return rep


def simulate(M: ChainModel, steps: int, seed: int, start: str | None = None) -> dict[str, float]:
    """Occupation frequencies of one trajectory of ``steps`` transitions.

    Uses numpy's PCG64 generator seeded with ``seed``; the trajectory is a
    deterministic function of the seed.
    """
    if steps < 1:
        raise ValueError("steps must be >= 1")
    n = len(M.states)
    cums = []
    for row in M.P:
        acc, c = 0.0, []
        for p in row:
            acc += float(p)
            c.append(acc)
        c[-1] = 1.0
        cums.append(c)
    rng = np.random.default_rng(seed)
    u = rng.random(steps).tolist()
    counts = [0] * n
    s = M.index(start) if start is not None else 0
    for x in u:
        s = bisect.bisect_right(cums[s], x)
        if s >= n:
            s = n - 1
        counts[s] += 1
    return {x: c / steps for x, c in zip(M.states, counts)}


def total_variation(p: dict[str, float], q: dict) -> float:
    keys = set(p) | set(q)
    return 0.5 * sum(abs(float(p.get(k, 0)) - float(q.get(k, 0))) for k in keys)
