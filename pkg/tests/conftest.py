from fractions import Fraction

import pytest

from su3rep import ComplexMatrix, RadicalSum
from su3rep.matrices import RadMatrix


def _complex3(re_entries, im_entries):
    re = RadMatrix(3)
    im = RadMatrix(3)
    for r, c, v in re_entries:
        re.put(r, c, v)
    for r, c, v in im_entries:
        im.put(r, c, v)
    return ComplexMatrix(re, im)


@pytest.fixture(scope="session")
def textbook_fundamental():
    """The standard 3x3 hermitian basis F1..F8 with exact entries,
    in the usual textbook state order (u, d, s)."""
    h = Fraction(1, 2)
    third_sqrt3 = RadicalSum.from_terms([(Fraction(1, 6), 3)])  # 1/(2*sqrt(3))
    return (
        _complex3([(0, 1, h), (1, 0, h)], []),
        _complex3([], [(0, 1, -h), (1, 0, h)]),
        _complex3([(0, 0, h), (1, 1, -h)], []),
        _complex3([(0, 2, h), (2, 0, h)], []),
        _complex3([], [(0, 2, -h), (2, 0, h)]),
        _complex3([(1, 2, h), (2, 1, h)], []),
        _complex3([], [(1, 2, -h), (2, 1, h)]),
        _complex3(
            [(0, 0, third_sqrt3), (1, 1, third_sqrt3), (2, 2, -2 * third_sqrt3)], []
        ),
    )
