"""Exact arithmetic for finite sums of rational multiples of square roots.

Every matrix entry produced by this package has the form

    sum_k (n_k / d_k) * sqrt(m_k)

with the m_k distinct square-free positive integers.  Square roots of
distinct square-free integers are linearly independent over the rationals,
so a value is zero exactly when it has no terms, and equality is a plain
dictionary comparison.  No tolerances appear anywhere in this module.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Union

Rational = Fraction

_RationalLike = Union[int, Fraction]


@lru_cache(maxsize=None)
def split_square(n: int) -> tuple[int, int]:
    """Write n = k*k*m with m square-free; return (k, m).

    Trial division suffices: the radicands arising here are products of
    small spin factors, far below anything needing real factorization.
    """
    if n <= 0:
        raise ValueError("split_square requires a positive integer")
    k, m = 1, 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            exp = 0
            while n % d == 0:
                n //= d
                exp += 1
            k *= d ** (exp // 2)
            if exp % 2:
                m *= d
        d += 1 if d == 2 else 2
    return k, m * n


class RadicalSum:
    """Immutable exact scalar: a finitely supported map square-free -> Fraction.

    The empty map is zero.  Stored coefficients are never zero and keys are
    always square-free, so representations are canonical and hashable.
    """

    __slots__ = ("_terms",)

    def __init__(self, value: _RationalLike = 0):
        c = Fraction(value)
        self._terms: dict[int, Fraction] = {1: c} if c else {}

    @classmethod
    def _raw(cls, terms: dict[int, Fraction]) -> "RadicalSum":
        # terms must already be canonical (square-free keys, no zeros)
        out = object.__new__(cls)
        out._terms = terms
        return out

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[_RationalLike, int]]) -> "RadicalSum":
        """Build from (coefficient, radicand) pairs, canonicalizing each radicand."""
        acc: dict[int, Fraction] = {}
        for coeff, radicand in terms:
            c = Fraction(coeff)
            if not c:
                continue
            k, m = split_square(radicand)
            c *= k
            tot = acc.get(m, _ZERO_FRACTION) + c
            if tot:
                acc[m] = tot
            else:
                acc.pop(m, None)
        return cls._raw(acc)

    # -- queries ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_rational(self) -> bool:
        return not self._terms or self._terms.keys() == {1}

    def rational_part(self) -> Fraction:
        return self._terms.get(1, _ZERO_FRACTION)

    def as_rational(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is irrational")
        return self.rational_part()

    def terms(self) -> Iterator[tuple[Fraction, int]]:
        """(coefficient, square-free radicand) pairs, ascending by radicand."""
        for m in sorted(self._terms):
            yield self._terms[m], m

    def to_float(self) -> float:
        return sum(float(c) * math.sqrt(m) for m, c in self._terms.items())

    # -- arithmetic ------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RadicalSum):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == RadicalSum(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __neg__(self) -> "RadicalSum":
        return RadicalSum._raw({m: -c for m, c in self._terms.items()})

    def __add__(self, other: "RadicalSum | _RationalLike") -> "RadicalSum":
        if not isinstance(other, RadicalSum):
            other = RadicalSum(other)
        if not other._terms:
            return self
        if not self._terms:
            return other
        acc = dict(self._terms)
        for m, c in other._terms.items():
            tot = acc.get(m, _ZERO_FRACTION) + c
            if tot:
                acc[m] = tot
            else:
                del acc[m]
        return RadicalSum._raw(acc)

    __radd__ = __add__

    def __sub__(self, other: "RadicalSum | _RationalLike") -> "RadicalSum":
        if not isinstance(other, RadicalSum):
            other = RadicalSum(other)
        return self + (-other)

    def __rsub__(self, other: _RationalLike) -> "RadicalSum":
        return RadicalSum(other) + (-self)

    def __mul__(self, other: "RadicalSum | _RationalLike") -> "RadicalSum":
        if not isinstance(other, RadicalSum):
            c = Fraction(other)
            if not c:
                return _ZERO
            return RadicalSum._raw({m: co * c for m, co in self._terms.items()})
        if not self._terms or not other._terms:
            return _ZERO
        acc: dict[int, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                # sqrt(m1)*sqrt(m2) = g*sqrt((m1/g)(m2/g)) with g = gcd:
                # the cofactors are coprime and square-free, so no refactoring.
                if m1 == m2:
                    c, m = c1 * c2 * m1, 1
                else:
                    g = math.gcd(m1, m2)
                    c, m = c1 * c2 * g, (m1 // g) * (m2 // g)
                tot = acc.get(m, _ZERO_FRACTION) + c
                if tot:
                    acc[m] = tot
                else:
                    acc.pop(m, None)
        return RadicalSum._raw(acc)

    __rmul__ = __mul__

    def __truediv__(self, other: _RationalLike) -> "RadicalSum":
        c = Fraction(other)
        if not c:
            raise ZeroDivisionError("division of a RadicalSum by zero")
        return self * (1 / c)

    # -- serialization ---------------------------------------------------

    def to_triples(self) -> list[tuple[int, int, int]]:
        """(num, den, sf) triples meaning sum (num/den)*sqrt(sf), ascending by sf."""
        return [
            (c.numerator, c.denominator, m)
            for c, m in self.terms()
        ]

    @classmethod
    def from_triples(cls, triples: Iterable[tuple[int, int, int]]) -> "RadicalSum":
        return cls.from_terms((Fraction(num, den), sf) for num, den, sf in triples)

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for c, m in self.terms():
            if m == 1:
                parts.append(str(c))
            elif c == 1:
                parts.append(f"√{m}")
            elif c == -1:
                parts.append(f"-√{m}")
            else:
                parts.append(f"{c}·√{m}")
        return " + ".join(parts).replace("+ -", "- ")


_ZERO_FRACTION = Fraction(0)
_ZERO = RadicalSum._raw({})

ZERO = _ZERO
ONE = RadicalSum(1)


def sqrt_of_rational(r: _RationalLike) -> RadicalSum:
    """Exact square root of a nonnegative rational as a single radical term.

    sqrt(a/b) = sqrt(a*b)/b; extracting the largest square factor of a*b
    leaves a square-free radicand.
    """
    r = Fraction(r)
    if r < 0:
        raise ValueError("negative radicand")
    if r == 0:
        return _ZERO
    k, m = split_square(r.numerator * r.denominator)
    return RadicalSum._raw({m: Fraction(k, r.denominator)})
