"""Standard su(2) ladder coefficients and spin matrices.

These are the diagonal blocks of the T-matrices.  Rows and columns are
ordered by decreasing 3-component: position a (1-based) holds sigma = s-(a-1),
so the raising matrix has its entries on the superdiagonal.
"""

from __future__ import annotations

from fractions import Fraction

from .matrices import RadMatrix
from .radical import RadicalSum, sqrt_of_rational


def ladder_coefficient(kind: str, two_s: int, two_sigma: int) -> RadicalSum:
    """r+(s, sigma) = sqrt((s-sigma)(s+sigma+1)), r- with sigma negated.

    Arguments are doubled; sigma must match s in parity and satisfy
    |sigma| <= s.
    """
    _check_component(two_s, two_sigma)
    if kind == "plus":
        radicand = Fraction((two_s - two_sigma) * (two_s + two_sigma + 2), 4)
    elif kind == "minus":
        radicand = Fraction((two_s + two_sigma) * (two_s - two_sigma + 2), 4)
    else:
        raise ValueError(f"kind must be 'plus' or 'minus', got {kind!r}")
    return sqrt_of_rational(radicand)


def spin_block(kind: str, two_s: int) -> RadMatrix:
    """The (2s+1)-dimensional spin matrix of the given kind.

    kind 'plus'/'minus' are the ladder matrices (super-/subdiagonal),
    'three' is diag(s, s-1, ..., -s).
    """
    if two_s < 0:
        raise ValueError("two_s must be nonnegative")
    n = two_s + 1
    out = RadMatrix(n)
    if kind == "three":
        for a in range(n):
            out.put(a, a, Fraction(two_s - 2 * a, 2))
    elif kind == "plus":
        # entry (a, a+1) lifts sigma = s-a to s-a+1: coefficient r+(s, s-a-1)
        for a in range(n - 1):
            out.put(a, a + 1, ladder_coefficient("plus", two_s, two_s - 2 * (a + 1)))
    elif kind == "minus":
        for a in range(1, n):
            out.put(a, a - 1, ladder_coefficient("minus", two_s, two_s - 2 * (a - 1)))
    else:
        raise ValueError(f"kind must be 'plus', 'minus' or 'three', got {kind!r}")
    return out


def _check_component(two_s: int, two_sigma: int) -> None:
    if two_s < 0:
        raise ValueError("two_s must be nonnegative")
    if abs(two_sigma) > two_s:
        raise ValueError(f"|sigma| exceeds s: 2s={two_s}, 2sigma={two_sigma}")
    if (two_s - two_sigma) % 2:
        raise ValueError(f"parity mismatch: 2s={two_s}, 2sigma={two_sigma}")
