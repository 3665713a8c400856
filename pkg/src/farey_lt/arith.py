"""Exact integer, prime, and polynomial primitives shared by every other module.

Everything here is deterministic and exact: arbitrary-precision Python
integers in, arbitrary-precision integers out. The vectorized hot loops live
in ``farey_lt._kernels``; this module is the reference layer they are tested
against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

__all__ = [
    "IntPolynomial",
    "MobiusTable",
    "dickson_poly",
    "fnv1a64",
    "inverse_table",
    "is_prime",
    "legendre_symbol",
    "lucas_v",
    "mobius_table",
    "poly_eval_mod",
    "poly_pair_dependent",
    "primes_up_to",
    "smallest_prime_factor_table",
    "squarefree_kernel",
]

# Witnesses making Miller-Rabin deterministic for all n < 3.3 * 10^24,
# which covers every 64-bit input.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@dataclass(frozen=True)
class IntPolynomial:
    """An integer-coefficient polynomial in ascending degree order.

    ``coeffs`` is kept canonical: no trailing zero, and the empty tuple is the
    zero polynomial (degree -1). Instances are immutable and hashable, so
    they can serve as cache keys.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        coeffs = tuple(int(c) for c in self.coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)

    # -- basic structure ----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    # -- ring operations ----------------------------------------------------

    @staticmethod
    def _coerce(other: Union["IntPolynomial", int]) -> "IntPolynomial | None":
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial((other,))
        return None

    def __add__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        n = max(len(self.coeffs), len(rhs.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = rhs.coeffs + (0,) * (n - len(rhs.coeffs))
        return IntPolynomial(tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        if self.is_zero() or rhs.is_zero():
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(rhs.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(rhs.coeffs):
                out[i + j] += a * b
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPolynomial":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = IntPolynomial((1,))
        for _ in range(n):
            result = result * self
        return result

    def __call__(self, x):
        """Exact Horner evaluation.

        Works for any argument supporting + and * with integers: ints,
        fractions.Fraction, and IntPolynomial itself (composition).
        """
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- wire format ----------------------------------------------------------

    def serialize(self) -> str:
        """Comma-separated decimal coefficients, ascending; '' is zero."""
        return ",".join(str(c) for c in self.coeffs)

    @classmethod
    def parse(cls, text: str) -> "IntPolynomial":
        if text == "":
            return cls(())
        return cls(tuple(int(part) for part in text.split(",")))


@dataclass(frozen=True)
class MobiusTable:
    """Mobius function values mu(1..n); ``values[k]`` is mu(k), values[0] unused."""

    n: int
    values: tuple[int, ...]

    def __getitem__(self, k: int) -> int:
        if not 1 <= k <= self.n:
            raise IndexError(f"mu({k}) outside tabulated range 1..{self.n}")
        return self.values[k]


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test for 64-bit-scale inputs."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_up_to(n: int) -> list[int]:
    """Strictly increasing list of all primes <= n (empty for n < 2)."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            start = p * p
            sieve[start : n + 1 : p] = b"\x00" * ((n - start) // p + 1)
    return [i for i in range(2, n + 1) if sieve[i]]


def smallest_prime_factor_table(n: int) -> list[int]:
    """spf[k] = least prime factor of k for 2 <= k <= n; spf[0] = spf[1] = 0."""
    spf = list(range(n + 1))
    if n >= 0:
        spf[0] = 0
    if n >= 1:
        spf[1] = 0
    for i in range(2, math.isqrt(n) + 1):
        if spf[i] == i:
            for j in range(i * i, n + 1, i):
                if spf[j] == j:
                    spf[j] = i
    return spf


def mobius_table(n: int) -> MobiusTable:
    """Tabulate mu(1..n) from a smallest-prime-factor sieve.

    Raises ValueError for n < 1.
    """
    if n < 1:
        raise ValueError(f"mobius_table requires n >= 1, got {n}")
    spf = smallest_prime_factor_table(n)
    values = [0] * (n + 1)
    values[1] = 1
    for k in range(2, n + 1):
        m = k
        sign = 1
        while m > 1:
            q = spf[m]
            m //= q
            if m % q == 0:
                sign = 0
                break
            sign = -sign
        values[k] = sign
    return MobiusTable(n=n, values=tuple(values))


def legendre_symbol(a: int, p: int) -> int:
    """Quadratic character of a mod an odd prime p: one of -1, 0, +1."""
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise ValueError(f"legendre_symbol requires an odd prime, got {p}")
    r = pow(a % p, (p - 1) // 2, p)
    if r == p - 1:
        return -1
    return r  # 0 or 1


def squarefree_kernel(n: int) -> int:
    """The squarefree d with n = d * m^2 and sign(d) = sign(n).

    Factors by trial division; intended for desk-scale |n| <= 10^12.
    """
    if n == 0:
        raise ValueError("squarefree kernel of 0 is undefined")
    sign = -1 if n < 0 else 1
    m = abs(n)
    kernel = 1
    q = 2
    while q * q <= m:
        if m % q == 0:
            e = 0
            while m % q == 0:
                m //= q
                e += 1
            if e % 2 == 1:
                kernel *= q
        q += 1 if q == 2 else 2
    # whatever is left is prime and appears to the first power
    kernel *= m
    return sign * kernel


def lucas_v(n: int, p_coef: int, q_coef: int) -> int:
    """V_n of the Lucas sequence with V_0 = 2, V_1 = P, V_{k+1} = P V_k - Q V_{k-1}.

    Equals alpha^n + beta^n for the roots alpha, beta of X^2 - P X + Q.
    """
    if n < 0:
        raise ValueError("lucas_v requires n >= 0")
    if n == 0:
        return 2
    prev, cur = 2, p_coef
    for _ in range(n - 1):
        prev, cur = cur, p_coef * cur - q_coef * prev
    return cur


def dickson_poly(n: int) -> IntPolynomial:
    """Degree-n polynomial D_n with x^n + x^(-n) = D_n(x + 1/x).

    D_0 = 2, D_1 = Y, D_{k+1} = Y * D_k - D_{k-1}.
    """
    if n < 0:
        raise ValueError("dickson_poly requires n >= 0")
    prev = IntPolynomial((2,))
    if n == 0:
        return prev
    y = IntPolynomial((0, 1))
    cur = y
    for _ in range(n - 1):
        prev, cur = cur, y * cur - prev
    return cur


def poly_eval_mod(f: IntPolynomial, x: int, p: int) -> int:
    """f(x) mod p in [0, p), by Horner with every step reduced mod p."""
    acc = 0
    xr = x % p
    for c in reversed(f.coeffs):
        acc = (acc * xr + c) % p
    return acc


def poly_pair_dependent(f: IntPolynomial, g: IntPolynomial) -> bool:
    """True iff f and g are linearly dependent over the rationals.

    Tested via vanishing of all 2x2 minors of the coefficient matrix; the
    zero polynomial is dependent with everything.
    """
    if f.is_zero() or g.is_zero():
        return True
    n = max(len(f.coeffs), len(g.coeffs))
    a = f.coeffs + (0,) * (n - len(f.coeffs))
    b = g.coeffs + (0,) * (n - len(g.coeffs))
    return all(
        a[i] * b[j] == a[j] * b[i] for i in range(n) for j in range(i + 1, n)
    )


def inverse_table(p: int) -> list[int]:
    """inv[i] = i^(-1) mod p for 1 <= i < p (index 0 unused); p must be prime."""
    inv = [0] * p
    if p >= 2:
        inv[1] = 1
    for i in range(2, p):
        inv[i] = (p - (p // i) * inv[p % i] % p) % p
    return inv


def fnv1a64(text: str) -> int:
    """64-bit FNV-1a hash of the UTF-8 encoding of ``text``."""
    h = 0xCBF29CE484222325
    for byte in text.encode("utf-8"):
        h ^= byte
        h = (h * 0x100000001B3) & 0xFFFFFFFFFFFFFFFF
    return h
