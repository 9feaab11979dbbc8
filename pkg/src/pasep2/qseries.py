"""Exact polynomials in q with big-integer coefficients.

Coefficients are Python ints, so nothing overflows; evaluation at a rational
point goes through :class:`fractions.Fraction`.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

Rational = Fraction


class NotDivisible(ArithmeticError):
    """Raised by :func:`div_exact` when the quotient is not an integer polynomial."""


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class QPoly:
    """Immutable univariate polynomial in ``q``; ``coeffs[i]`` is the coefficient of ``q**i``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = _strip(int(x) for x in coeffs)
        object.__setattr__(self, "coeffs", c)

    def __setattr__(self, name, value):
        raise AttributeError("QPoly is immutable")

    def __copy__(self) -> QPoly:
        return self

    def __deepcopy__(self, memo) -> QPoly:
        return self

    def __reduce__(self):
        return (QPoly, (self.coeffs,))

    @classmethod
    def const(cls, c: int) -> QPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> QPoly:
        return cls((0,) * k + (c,))

    @classmethod
    def q(cls) -> QPoly:
        return cls((0, 1))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    @staticmethod
    def _coerce(other) -> QPoly | None:
        if isinstance(other, QPoly):
            return other
        if isinstance(other, int):
            return QPoly((other,))
        return None

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self) -> int:
        return hash(("QPoly", self.coeffs))

    def __add__(self, other) -> QPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        res = list(a)
        for i, x in enumerate(b):
            res[i] += x
        return QPoly(res)

    __radd__ = __add__

    def __neg__(self) -> QPoly:
        return QPoly(-x for x in self.coeffs)

    def __sub__(self, other) -> QPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> QPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other) -> QPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return ZERO
        res = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    res[i + j] += x * y
        return QPoly(res)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> QPoly:
        if n < 0:
            raise ValueError("negative power")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> QPoly:
        """Multiply by ``q**k``."""
        if not self.coeffs:
            return self
        return QPoly((0,) * k + self.coeffs)

    def __call__(self, q0):
        return eval_rational(self, q0)

    def nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def __repr__(self) -> str:
        return f"QPoly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                mono = "q" if i == 1 else f"q^{i}"
                body = mono if mag == 1 else f"{mag}{mono}"
            if not terms:
                terms.append(body if c > 0 else "-" + body)
            else:
                terms.append(("+ " if c > 0 else "- ") + body)
        return " ".join(terms)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: str | list) -> QPoly:
        if isinstance(data, str):
            data = json.loads(data)
        if not isinstance(data, list) or not all(isinstance(x, str) for x in data):
            raise ValueError("QPoly JSON must be an array of decimal strings")
        return cls(int(x) for x in data)


ZERO = QPoly()
ONE = QPoly((1,))
Q = QPoly((0, 1))


@lru_cache(maxsize=None)
def qint(n: int) -> QPoly:
    """``[n]_q = 1 + q + ... + q^(n-1)``; ``[0]_q = 0``."""
    if n < 0:
        raise ValueError("qint needs n >= 0")
    return QPoly((1,) * n)


@lru_cache(maxsize=None)
def qfactorial(n: int) -> QPoly:
    if n < 0:
        raise ValueError("qfactorial needs n >= 0")
    if n == 0:
        return ONE
    return qfactorial(n - 1) * qint(n)


def div_exact(a: QPoly, b: QPoly) -> QPoly:
    """Return ``c`` with ``b * c == a``; raise :class:`NotDivisible` otherwise.

    Long division over the integers, checking at every step that the leading
    coefficient divides exactly.
    """
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero():
        return ZERO
    rem = list(a.coeffs)
    bc = b.coeffs
    db = len(bc) - 1
    lead = bc[-1]
    if len(rem) - 1 < db:
        raise NotDivisible(f"{a} is not divisible by {b}")
    quot = [0] * (len(rem) - db)
    for k in range(len(rem) - 1 - db, -1, -1):
        top = rem[k + db]
        if top % lead:
            raise NotDivisible(f"{a} is not divisible by {b}")
        c = top // lead
        quot[k] = c
        if c:
            for j, y in enumerate(bc):
                rem[k + j] -= c * y
    if any(rem):
        raise NotDivisible(f"{a} is not divisible by {b}")
    return QPoly(quot)


def eval_rational(p: QPoly, q0) -> Fraction:
    """Horner evaluation at an exact rational point."""
    x = Fraction(q0)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def parse_rational(text: str) -> Fraction:
    """Parse ``"1/2"``, ``"3"`` or ``"0.25"`` as an exact fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not an exact rational: {text!r}") from exc


class YQPoly:
    """Polynomial in an auxiliary variable ``y`` whose coefficients are :class:`QPoly`.

    Used to track the number of ``A`` factors in ``(D + yA + E)^N``.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, QPoly] | None = None):
        clean = {k: v for k, v in (terms or {}).items() if not v.is_zero()}
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("YQPoly is immutable")

    @classmethod
    def from_qpoly(cls, p: QPoly, ydeg: int = 0) -> YQPoly:
        return cls({ydeg: p})

    def coeff(self, r: int) -> QPoly:
        """``[y^r]`` of this polynomial."""
        return self.terms.get(r, ZERO)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, YQPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.terms.items())))

    def __add__(self, other: YQPoly) -> YQPoly:
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, ZERO) + v
        return YQPoly(out)

    def __mul__(self, other: YQPoly) -> YQPoly:
        out: dict[int, QPoly] = {}
        for i, a in self.terms.items():
            for j, b in other.terms.items():
                out[i + j] = out.get(i + j, ZERO) + a * b
        return YQPoly(out)

    def __repr__(self) -> str:
        return f"YQPoly({ {k: self.terms[k] for k in sorted(self.terms)} })"
