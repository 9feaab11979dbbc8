"""Matrix Ansatz backend with explicit tridiagonal matrices over q-polynomials.

With 1-based indices::

    D[i][i] = D[i][i+1] = [i]_q
    E[i+1][i] = E[i+1][i+1] = [i]_q      (first row of E is zero)
    A = diag(1, q, q^2, ...) . (D + E)
    W = (1, 1, 0, ...),  V = (1, 0, ...)^T

A word of length N only touches indices up to N + 2, so ``d = N + 3``
truncation is exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .qseries import ONE, Q, ZERO, QPoly, YQPoly, eval_rational, qfactorial, qint
from .states import check_ade

Matrix = list  # list of rows


@dataclass(frozen=True)
class AnsatzMatrices:
    d: int
    D: Matrix
    E: Matrix
    A: Matrix
    W: list
    V: list


class RelationViolated(AssertionError):
    def __init__(self, relation: str, entry: tuple[int, int] | int, difference):
        self.relation = relation
        self.entry = entry
        self.difference = difference
        super().__init__(f"{relation} fails at entry {entry}: difference {difference}")


def _zeros(d: int, zero=ZERO) -> Matrix:
    return [[zero] * d for _ in range(d)]


def mat_mul(a: Matrix, b: Matrix, zero=ZERO) -> Matrix:
    d = len(a)
    out = _zeros(d, zero)
    for i in range(d):
        row = a[i]
        for k in range(d):
            x = row[k]
            if x == zero:
                continue
            bk = b[k]
            for j in range(d):
                if bk[j] != zero:
                    out[i][j] = out[i][j] + x * bk[j]
    return out


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(c, a: Matrix) -> Matrix:
    return [[c * x for x in row] for row in a]


@lru_cache(maxsize=None)
def build_matrices(d: int) -> AnsatzMatrices:
    if d < 2:
        raise ValueError("dimension must be at least 2")
    D, E = _zeros(d), _zeros(d)
    for i in range(d):  # 0-based row i holds [i + 1]_q
        D[i][i] = qint(i + 1)
        if i + 1 < d:
            D[i][i + 1] = qint(i + 1)
            E[i + 1][i] = qint(i + 1)
            E[i + 1][i + 1] = qint(i + 1)
    S = mat_add(D, E)
    A = [[x.shift(i) for x in S[i]] for i in range(d)]
    W = [ONE, ONE] + [ZERO] * (d - 2)
    V = [ONE] + [ZERO] * (d - 1)
    return AnsatzMatrices(d, D, E, A, W, V)


def evaluate_matrices(m: AnsatzMatrices, q0) -> AnsatzMatrices:
    """Substitute an exact rational for q in every entry."""
    ev = lambda M: [[eval_rational(x, q0) for x in row] for row in M]  # noqa: E731
    return AnsatzMatrices(
        m.d,
        ev(m.D),
        ev(m.E),
        ev(m.A),
        [eval_rational(x, q0) for x in m.W],
        [eval_rational(x, q0) for x in m.V],
    )


@dataclass
class AnsatzReport:
    d: int
    checked: list[str] = field(default_factory=list)


def verify_ansatz(
    d: int,
    *,
    q0=None,
    a_is_d_plus_e: bool = False,
    matrices: AnsatzMatrices | None = None,
) -> AnsatzReport:
    """Check the five Ansatz relations entrywise; raise :class:`RelationViolated` on failure.

    Products are compared on the leading ``(d - 2) x (d - 2)`` block, which
    truncation cannot reach. ``q0`` substitutes a rational for q;
    ``a_is_d_plus_e`` replaces A by D + E (only valid at q = 1).
    """
    if d < 4:
        raise ValueError("need d >= 4")
    m = matrices if matrices is not None else build_matrices(d)
    if q0 is not None:
        m = evaluate_matrices(m, q0)
        zero, qv = Fraction(0), Fraction(q0)
    else:
        zero, qv = ZERO, Q
    D, E = m.D, m.E
    A = mat_add(D, E) if a_is_d_plus_e else m.A
    b = d - 2
    report = AnsatzReport(d)

    def compare(name: str, lhs: Matrix, rhs: Matrix):
        for i in range(b):
            for j in range(b):
                if lhs[i][j] != rhs[i][j]:
                    raise RelationViolated(name, (i + 1, j + 1), lhs[i][j] - rhs[i][j])
        report.checked.append(name)

    mul = lambda x, y: mat_mul(x, y, zero)  # noqa: E731
    compare("DE = qED + D + E", mul(D, E), mat_add(mat_add(mat_scale(qv, mul(E, D)), D), E))
    compare("DA = qAD + A", mul(D, A), mat_add(mat_scale(qv, mul(A, D)), A))
    compare("AE = qEA + A", mul(A, E), mat_add(mat_scale(qv, mul(E, A)), A))

    WE = [sum((m.W[k] * E[k][j] for k in range(d)), zero) for j in range(d)]
    for j in range(d - 1):
        if WE[j] != m.W[j]:
            raise RelationViolated("<W|E = <W|", j + 1, WE[j] - m.W[j])
    report.checked.append("<W|E = <W|")
    DV = [sum((D[i][k] * m.V[k] for k in range(d)), zero) for i in range(d)]
    for i in range(d):
        if DV[i] != m.V[i]:
            raise RelationViolated("D|V> = |V>", i + 1, DV[i] - m.V[i])
    report.checked.append("D|V> = |V>")
    return report


def _row_times(vec: list, M: Matrix, zero=ZERO) -> list:
    d = len(vec)
    out = [zero] * d
    for k, x in enumerate(vec):
        if x == zero:
            continue
        row = M[k]
        for j in range(max(0, k - 1), min(d, k + 2)):
            if row[j] != zero:
                out[j] = out[j] + x * row[j]
    return out


@lru_cache(maxsize=None)
def z_poly_ansatz(X: str, d: int | None = None) -> QPoly:
    """``<W| X |V>`` with each letter replaced by its matrix."""
    check_ade(X)
    m = build_matrices(d if d is not None else len(X) + 3)
    mats = {"A": m.A, "D": m.D, "E": m.E}
    vec = list(m.W)
    for c in X:
        vec = _row_times(vec, mats[c])
    return sum((x * v for x, v in zip(vec, m.V)), ZERO)


@lru_cache(maxsize=None)
def z_total_ansatz_y(N: int, d: int | None = None) -> YQPoly:
    """``<W| (D + yA + E)^N |V>`` as a polynomial in y over q-polynomials."""
    m = build_matrices(d if d is not None else N + 3)
    size = m.d
    Y0 = lambda p: YQPoly.from_qpoly(p, 0)  # noqa: E731
    M = [
        [YQPoly({0: m.D[i][j] + m.E[i][j], 1: m.A[i][j]}) for j in range(size)]
        for i in range(size)
    ]
    yzero = YQPoly()
    vec = [Y0(x) for x in m.W]
    for _ in range(N):
        vec = _row_times(vec, M, yzero)
    return sum((x * Y0(v) for x, v in zip(vec, m.V)), yzero)


def z_total_ansatz(N: int, r: int) -> QPoly:
    """``[y^r] <W| (D + yA + E)^N |V>``."""
    if not 0 <= r <= N:
        raise ValueError("need 0 <= r <= N")
    return z_total_ansatz_y(N).coeff(r)


@dataclass
class RecurrenceReport:
    checked: int = 0
    failure: str | None = None

    @property
    def ok(self) -> bool:
        return self.failure is None


def check_recurrences(max_size: int, z: Callable[[str], QPoly] = z_poly_ansatz) -> RecurrenceReport:
    """Verify the three A^s-prefix recurrences for every word of total size <= ``max_size``.

    * ``Z(A^s D X) = [k+1] Z(A^s X) + sum_{X = X1 E X2} q^kappa(X1) Z(A^s X1 D X2)``
      where k counts A and E in X and kappa counts A and E in X1;
    * ``Z(A^s E X) = [s+1] Z(A^s X)``;
    * ``Z(A^s) = [s+1]!``.
    """
    if max_size > 7:
        raise ValueError("max_size above 7 is too costly")
    rep = RecurrenceReport()
    for size in range(0, max_size + 1):
        for s in range(size + 1):
            pre = "A" * s
            if s == size:
                rep.checked += 1
                if z(pre) != qfactorial(s + 1):
                    rep.failure = f"Z({pre or 'empty'}) != [{s + 1}]_q!"
                    return rep
                continue
            for tail in itertools.product("ADE", repeat=size - s - 1):
                X = "".join(tail)
                k = sum(c in "AE" for c in X)
                rhs = qint(k + 1) * z(pre + X)
                for i, c in enumerate(X):
                    if c == "E":
                        x1, x2 = X[:i], X[i + 1 :]
                        kappa = sum(ch in "AE" for ch in x1)
                        rhs = rhs + z(pre + x1 + "D" + x2).shift(kappa)
                rep.checked += 1
                if z(pre + "D" + X) != rhs:
                    rep.failure = f"D-recurrence fails for s={s}, X={X!r}"
                    return rep
                rep.checked += 1
                if z(pre + "E" + X) != qint(s + 1) * z(pre + X):
                    rep.failure = f"E-recurrence fails for s={s}, X={X!r}"
                    return rep
    return rep
