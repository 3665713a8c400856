"""Imaginary quadratic invariants and the Dickson/Lucas power identity.

Class numbers come from exhaustive enumeration of reduced primitive binary
quadratic forms. The power identity replaces ideal arithmetic: with pi and
pi-bar the roots of X^2 - a_p X + p, the choice-free quantity
(pi^n + pi-bar^n)^2 / (pi pi-bar)^n equals P(a_p^2 / p) for the integer
polynomial P built from a Dickson polynomial, and its numerator is the
square of a Lucas number. Everything checks out in exact rational arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import arith
from .arith import IntPolynomial

__all__ = [
    "ImaginaryQuadraticField",
    "NotImaginary",
    "SupersingularExcluded",
    "class_number",
    "field_of",
    "frobenius_field",
    "lemma_poly",
    "lucas_lemma_check",
]


class SupersingularExcluded(ValueError):
    """a_p = 0 generates no imaginary quadratic field here."""


class NotImaginary(ValueError):
    """a_p^2 >= 4p: the quadratic X^2 - a_p X + p has no imaginary roots."""


@dataclass(frozen=True)
class ImaginaryQuadraticField:
    """Invariants of Q(sqrt(d)) for squarefree d < 0."""

    d: int
    disc: int
    class_number: int
    unit_count: int


def class_number(disc: int) -> int:
    """Number of reduced primitive forms (a, b, c) of discriminant disc < 0.

    Reduced means |b| <= a <= c with b >= 0 whenever |b| = a or a = c;
    primitive means gcd(a, b, c) = 1. Enumeration over a <= sqrt(|disc|/3).
    """
    if disc >= 0 or disc % 4 not in (0, 1):
        raise ValueError(f"discriminant must be negative and 0 or 1 mod 4, got {disc}")
    count = 0
    a = 1
    while 3 * a * a <= -disc:
        for b in range(-a, a + 1):
            num = b * b - disc
            if num % (4 * a) != 0:
                continue
            c = num // (4 * a)
            if c < a:
                continue
            if b < 0 and (-b == a or a == c):
                continue
            if math.gcd(math.gcd(a, abs(b)), c) != 1:
                continue
            count += 1
        a += 1
    return count


def field_of(d: int) -> ImaginaryQuadraticField:
    """Invariants of Q(sqrt(d)): discriminant, class number, unit count.

    d must be squarefree and negative. The unit count is 6 for disc -3,
    4 for disc -4, and 2 otherwise.
    """
    if d >= 0:
        raise ValueError(f"d must be negative, got {d}")
    if arith.squarefree_kernel(d) != d:
        raise ValueError(f"d must be squarefree, got {d}")
    disc = d if d % 4 == 1 else 4 * d
    h = class_number(disc)
    if disc == -3:
        w = 6
    elif disc == -4:
        w = 4
    else:
        w = 2
    return ImaginaryQuadraticField(d=d, disc=disc, class_number=h, unit_count=w)


def lemma_poly(hw: int) -> IntPolynomial:
    """The monic degree-hw integer polynomial P with

        (a^hw + b^hw)^2 / (ab)^hw = P((a + b)^2 / (ab))

    for independent variables a, b. Writing s = a/b + b/a = X - 2, the left
    side is D_hw(s) + 2 for the Dickson polynomial D_hw, so
    P(X) = D_hw(X - 2) + 2.
    """
    if hw < 1:
        raise ValueError(f"hw must be >= 1, got {hw}")
    shift = IntPolynomial((-2, 1))
    return arith.dickson_poly(hw)(shift) + 2


def frobenius_field(a_p: int, p: int) -> int:
    """Squarefree d < 0 with Q(sqrt(a_p^2 - 4p)) = Q(sqrt(d)).

    Requires an ordinary imaginary situation: a_p != 0 and a_p^2 < 4p.
    """
    if a_p == 0:
        raise SupersingularExcluded("a_p = 0 is excluded from Frobenius-field counting")
    if a_p * a_p >= 4 * p:
        raise NotImaginary(f"a_p^2 = {a_p * a_p} >= 4p = {4 * p}")
    return arith.squarefree_kernel(a_p * a_p - 4 * p)


def lucas_lemma_check(a_p: int, p: int, hw: int) -> bool:
    """Exact check that p^hw * P(a_p^2 / p) = V_hw(a_p, p)^2.

    P is lemma_poly(hw) and V the Lucas sequence for X^2 - a_p X + p; both
    sides are exact rationals. This is the computable face of the power
    identity behind lemma_poly.
    """
    p_poly = lemma_poly(hw)
    lhs = p_poly(Fraction(a_p * a_p, p)) * p**hw
    rhs = arith.lucas_v(hw, a_p, p) ** 2
    return lhs == rhs
