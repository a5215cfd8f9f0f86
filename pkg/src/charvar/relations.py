"""Named constants of the trace ring.

``big_P`` and ``big_Q`` are the two base-ring polynomials appearing in the
quotient relation t5^2 - P*t5 + Q that cuts the rank-2 SL(3,C) character
variety out of affine 9-space.  ``little_p`` and ``little_q`` are the small
seeds whose dihedral symmetrizations recover P and Q (see
:mod:`charvar.symmetry`).  All five values are transcribed literally and
then cross-validated elsewhere: exact symmetrization identities on one
side, Monte-Carlo evaluation at random SL(3,C) pairs on the other, so a
transcription typo cannot survive the test suite.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Tuple

from .polyring import BasePolynomial, FreePolynomial, free_t


def _build(terms: Iterable[Tuple[int, Mapping[int, int]]], denominator: int = 1) -> BasePolynomial:
    total = BasePolynomial.zero()
    for coeff, exponents in terms:
        total = total + BasePolynomial.monomial(exponents, Fraction(coeff, denominator))
    return total


_P_TERMS = (
    (1, {1: 1, -1: 1, 2: 1, -2: 1}),
    (-1, {1: 1, 2: 1, -3: 1}),
    (-1, {-1: 1, -2: 1, 3: 1}),
    (-1, {1: 1, -2: 1, -4: 1}),
    (-1, {-1: 1, 2: 1, 4: 1}),
    (1, {1: 1, -1: 1}),
    (1, {2: 1, -2: 1}),
    (1, {3: 1, -3: 1}),
    (1, {4: 1, -4: 1}),
    (-3, {}),
)

_Q_TERMS = (
    (9, {}),
    (-6, {1: 1, -1: 1}),
    (-6, {2: 1, -2: 1}),
    (-6, {3: 1, -3: 1}),
    (-6, {4: 1, -4: 1}),
    (1, {1: 3}),
    (1, {2: 3}),
    (1, {3: 3}),
    (1, {4: 3}),
    (1, {-1: 3}),
    (1, {-2: 3}),
    (1, {-3: 3}),
    (1, {-4: 3}),
    (-3, {-4: 1, -3: 1, -1: 1}),
    (-3, {4: 1, 3: 1, 1: 1}),
    (-3, {-4: 1, 2: 1, 3: 1}),
    (-3, {4: 1, -2: 1, -3: 1}),
    (3, {-4: 1, -2: 1, 1: 1}),
    (3, {4: 1, 2: 1, -1: 1}),
    (3, {1: 1, 2: 1, -3: 1}),
    (3, {-1: 1, -2: 1, 3: 1}),
    (1, {-2: 1, -1: 1, 2: 1, 1: 1}),
    (1, {-3: 1, -2: 1, 3: 1, 2: 1}),
    (1, {-4: 1, -1: 1, 4: 1, 1: 1}),
    (1, {-4: 1, -2: 1, 4: 1, 2: 1}),
    (1, {-3: 1, -1: 1, 3: 1, 1: 1}),
    (1, {-3: 1, -4: 1, 3: 1, 4: 1}),
    (1, {-4: 2, -3: 1, -2: 1}),
    (1, {4: 2, 3: 1, 2: 1}),
    (1, {-1: 2, -2: 1, -4: 1}),
    (1, {1: 2, 2: 1, 4: 1}),
    (1, {1: 1, -2: 2, -3: 1}),
    (1, {-1: 1, 2: 2, 3: 1}),
    (1, {-4: 1, -3: 1, 1: 2}),
    (1, {4: 1, 3: 1, -1: 2}),
    (1, {-4: 1, 2: 1, -3: 2}),
    (1, {4: 1, -2: 1, 3: 2}),
    (1, {-1: 2, -3: 1, 2: 1}),
    (1, {1: 2, 3: 1, -2: 1}),
    (1, {-4: 1, 1: 1, 2: 2}),
    (1, {4: 1, -1: 1, -2: 2}),
    (1, {-4: 1, 3: 1, -2: 2}),
    (1, {4: 1, -3: 1, 2: 2}),
    (1, {1: 1, 3: 1, -4: 2}),
    (1, {-1: 1, -3: 1, 4: 2}),
    (1, {-1: 1, -4: 1, 3: 2}),
    (1, {1: 1, 4: 1, -3: 2}),
    (-2, {-3: 2, -2: 1, -1: 1}),
    (-2, {3: 2, 2: 1, 1: 1}),
    (-2, {-4: 2, -1: 1, 2: 1}),
    (-2, {4: 2, 1: 1, -2: 1}),
    (1, {-1: 2, -2: 2, -3: 1}),
    (1, {1: 2, 2: 2, 3: 1}),
    (1, {-4: 1, -1: 2, 2: 2}),
    (1, {4: 1, 1: 2, -2: 2}),
    (-1, {-4: 1, -2: 2, 2: 1, 1: 1}),
    (-1, {4: 1, 2: 2, -2: 1, -1: 1}),
    (-1, {-3: 1, 1: 2, -1: 1, 2: 1}),
    (-1, {3: 1, -1: 2, 1: 1, -2: 1}),
    (-1, {-3: 1, 2: 2, -2: 1, 1: 1}),
    (-1, {3: 1, -2: 2, 2: 1, -1: 1}),
    (-1, {-4: 1, -2: 1, -1: 1, 1: 2}),
    (-1, {4: 1, 2: 1, 1: 1, -1: 2}),
    (-1, {-1: 1, -2: 3, 1: 1}),
    (-1, {-1: 1, 2: 3, 1: 1}),
    (-1, {-1: 3, -2: 1, 2: 1}),
    (-1, {1: 3, -2: 1, 2: 1}),
    (-1, {-4: 1, -3: 1, -2: 1, -1: 1, 2: 1}),
    (-1, {4: 1, 3: 1, 2: 1, 1: 1, -2: 1}),
    (-1, {-1: 1, 1: 1, 2: 1, -4: 1, 3: 1}),
    (-1, {-1: 1, 1: 1, -2: 1, 4: 1, -3: 1}),
    (1, {-2: 1, -1: 2, 1: 2, 2: 1}),
    (1, {-1: 1, -2: 2, 2: 2, 1: 1}),
)

_LITTLE_P_TERMS = (
    (1, {1: 1, -1: 1, 2: 1, -2: 1}),
    (-4, {1: 1, -2: 1, -4: 1}),
    (2, {1: 1, -1: 1}),
    (2, {3: 1, -3: 1}),
)

_LITTLE_Q_TERMS = (
    (2, {-2: 1, -1: 2, 1: 2, 2: 1}),
    (4, {1: 2, 2: 2, 3: 1}),
    (-4, {1: 3, -2: 1, 2: 1}),
    (-8, {-4: 1, -2: 1, -1: 1, 1: 2}),
    (-4, {4: 1, 3: 1, 2: 1, 1: 1, -2: 1}),
    (8, {1: 1, 3: 1, -4: 2}),
    (8, {-4: 1, 1: 1, 2: 2}),
    (-8, {3: 2, 2: 1, 1: 1}),
    (4, {4: 1, -3: 1, 2: 2}),
    (1, {-2: 1, -1: 1, 2: 1, 1: 1}),
    (1, {-3: 1, -4: 1, 3: 1, 4: 1}),
    (4, {-3: 1, -1: 1, 3: 1, 1: 1}),
    (4, {1: 3}),
    (4, {3: 3}),
    (12, {-4: 1, -2: 1, 1: 1}),
    (-12, {-4: 1, 2: 1, 3: 1}),
    (-12, {1: 1, -1: 1}),
    (-12, {3: 1, -3: 1}),
)


@lru_cache(maxsize=1)
def big_P() -> BasePolynomial:
    """The affine coefficient P of the quotient relation (10 terms)."""
    return _build(_P_TERMS)


@lru_cache(maxsize=1)
def big_Q() -> BasePolynomial:
    """The constant coefficient Q of the quotient relation (degree 6)."""
    return _build(_Q_TERMS)


@lru_cache(maxsize=1)
def little_p() -> BasePolynomial:
    """Seed polynomial whose dihedral symmetrization gives P + 3."""
    return _build(_LITTLE_P_TERMS, denominator=8)


@lru_cache(maxsize=1)
def little_q() -> BasePolynomial:
    """Seed polynomial whose dihedral symmetrization gives Q - 9."""
    return _build(_LITTLE_Q_TERMS, denominator=8)


@lru_cache(maxsize=1)
def defining_relation() -> FreePolynomial:
    """t5^2 - P*t5 + Q in the free ring; reduces to zero by definition."""
    return free_t(5) ** 2 - FreePolynomial.from_base(big_P()) * free_t(5) + FreePolynomial.from_base(big_Q())


NAMED = {
    "P": big_P,
    "Q": big_Q,
    "p": little_p,
    "q": little_q,
    "relation": defining_relation,
}
