"""Sparse square matrices over RadicalSum.

The generator matrices have O(d) nonzero entries out of d*d, and the whole
verification suite is products, sums and exact zero tests, so a dict-of-rows
layout keeps everything near-linear in the number of nonzeros.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Union

from .radical import RadicalSum

_Scalar = Union[int, Fraction, RadicalSum]


class RadMatrix:
    """n x n matrix with RadicalSum entries; zeros are never stored.

    Instances are built once and treated as immutable afterwards.
    """

    __slots__ = ("n", "_rows")

    def __init__(self, n: int):
        self.n = n
        self._rows: dict[int, dict[int, RadicalSum]] = {}

    @classmethod
    def identity(cls, n: int, scale: _Scalar = 1) -> "RadMatrix":
        out = cls(n)
        val = scale if isinstance(scale, RadicalSum) else RadicalSum(scale)
        if val:
            for i in range(n):
                out._rows[i] = {i: val}
        return out

    # -- entry access (0-based) ------------------------------------------

    def put(self, r: int, c: int, value: _Scalar) -> None:
        if not (0 <= r < self.n and 0 <= c < self.n):
            raise IndexError(f"({r}, {c}) outside {self.n}x{self.n}")
        val = value if isinstance(value, RadicalSum) else RadicalSum(value)
        row = self._rows.setdefault(r, {})
        if val:
            row[c] = val
        else:
            row.pop(c, None)
            if not row:
                del self._rows[r]

    def get(self, r: int, c: int) -> RadicalSum:
        return self._rows.get(r, _EMPTY_ROW).get(c, _ZERO)

    def items(self) -> Iterator[tuple[int, int, RadicalSum]]:
        """Nonzero entries sorted by (row, col)."""
        for r in sorted(self._rows):
            row = self._rows[r]
            for c in sorted(row):
                yield r, c, row[c]

    @property
    def nnz(self) -> int:
        return sum(len(row) for row in self._rows.values())

    def is_zero(self) -> bool:
        return not self._rows

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RadMatrix):
            return NotImplemented
        return self.n == other.n and self._rows == other._rows

    def __hash__(self):
        raise TypeError("RadMatrix is not hashable")

    # -- algebra ----------------------------------------------------------

    def __add__(self, other: "RadMatrix") -> "RadMatrix":
        self._check_shape(other)
        out = RadMatrix(self.n)
        out._rows = {r: dict(row) for r, row in self._rows.items()}
        for r, row in other._rows.items():
            dest = out._rows.setdefault(r, {})
            for c, v in row.items():
                tot = dest.get(c, _ZERO) + v
                if tot:
                    dest[c] = tot
                else:
                    dest.pop(c, None)
            if not dest:
                del out._rows[r]
        return out

    def __sub__(self, other: "RadMatrix") -> "RadMatrix":
        return self + (-other)

    def __neg__(self) -> "RadMatrix":
        out = RadMatrix(self.n)
        out._rows = {
            r: {c: -v for c, v in row.items()} for r, row in self._rows.items()
        }
        return out

    def scaled(self, factor: _Scalar) -> "RadMatrix":
        fac = factor if isinstance(factor, RadicalSum) else RadicalSum(factor)
        out = RadMatrix(self.n)
        if not fac:
            return out
        for r, row in self._rows.items():
            out._rows[r] = {c: v * fac for c, v in row.items()}
        return out

    def __matmul__(self, other: "RadMatrix") -> "RadMatrix":
        self._check_shape(other)
        out = RadMatrix(self.n)
        for r, row in self._rows.items():
            acc: dict[int, RadicalSum] = {}
            for k, a in row.items():
                brow = other._rows.get(k)
                if not brow:
                    continue
                for c, b in brow.items():
                    tot = acc.get(c, _ZERO) + a * b
                    if tot:
                        acc[c] = tot
                    else:
                        acc.pop(c, None)
            if acc:
                out._rows[r] = acc
        return out

    def transpose(self) -> "RadMatrix":
        out = RadMatrix(self.n)
        for r, row in self._rows.items():
            for c, v in row.items():
                out._rows.setdefault(c, {})[r] = v
        return out

    def negative_transpose(self) -> "RadMatrix":
        out = RadMatrix(self.n)
        for r, row in self._rows.items():
            for c, v in row.items():
                out._rows.setdefault(c, {})[r] = -v
        return out

    def is_symmetric(self) -> bool:
        return self == self.transpose()

    def is_antisymmetric(self) -> bool:
        return self == -self.transpose()

    def trace(self) -> RadicalSum:
        total = _ZERO
        for r, row in self._rows.items():
            v = row.get(r)
            if v is not None:
                total = total + v
        return total

    # -- diagnostics -------------------------------------------------------

    def max_abs_float(self) -> float:
        """Largest |entry| in floating point; 0.0 for the zero matrix."""
        best = 0.0
        for row in self._rows.values():
            for v in row.values():
                best = max(best, abs(v.to_float()))
        return best

    def to_float(self) -> list[list[float]]:
        dense = [[0.0] * self.n for _ in range(self.n)]
        for r, row in self._rows.items():
            for c, v in row.items():
                dense[r][c] = v.to_float()
        return dense

    def _check_shape(self, other: "RadMatrix") -> None:
        if self.n != other.n:
            raise ValueError(f"shape mismatch: {self.n} vs {other.n}")

    def __repr__(self) -> str:
        return f"RadMatrix(n={self.n}, nnz={self.nnz})"


_ZERO = RadicalSum(0)
_EMPTY_ROW: dict[int, RadicalSum] = {}


def commutator(a: RadMatrix, b: RadMatrix) -> RadMatrix:
    return (a @ b) - (b @ a)
