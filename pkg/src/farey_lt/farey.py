"""Farey fractions of bounded height and their residue-class statistics mod p.

The central object is the histogram R_{T,p}(v): among the reduced fractions
alpha/beta with 1 <= alpha, beta <= T and p not dividing beta, how many land
in each residue class v = alpha * beta^(-1) mod p. Equidistribution predicts
each nonzero class holds about (6/pi^2) T^2 / p of them.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Sequence

from . import _kernels, arith

__all__ = [
    "CoprimePair",
    "ResidueHistogram",
    "SIX_OVER_PI_SQ",
    "count_coprime_pairs",
    "enumerate_coprime_pairs",
    "l1_discrepancy",
    "l2_m_deviation",
    "m_count",
    "residue_histogram",
    "residue_histogram_oracle",
]

SIX_OVER_PI_SQ = 6.0 / math.pi**2

# The brute-force oracle is quadratic in T; refuse sizes past this.
ORACLE_T_LIMIT = 10_000


@dataclass(frozen=True)
class CoprimePair:
    """A reduced fraction alpha/beta with positive numerator and denominator."""

    alpha: int
    beta: int

    def __post_init__(self) -> None:
        if self.alpha < 1 or self.beta < 1:
            raise ValueError(f"coprime pair entries must be >= 1, got {self}")
        if math.gcd(self.alpha, self.beta) != 1:
            raise ValueError(f"gcd({self.alpha}, {self.beta}) != 1")


@dataclass(frozen=True)
class ResidueHistogram:
    """Counts of reduced fractions by residue class alpha * beta^(-1) mod p."""

    p: int
    t_order: int
    counts: tuple[int, ...]

    @property
    def main_term(self) -> float:
        """Expected count per nonzero residue: (6/pi^2) * T^2 / p."""
        return SIX_OVER_PI_SQ * (self.t_order * self.t_order) / self.p


def count_coprime_pairs(t_order: int) -> int:
    """Exact number of coprime pairs (alpha, beta) with 1 <= alpha, beta <= T.

    Computed by Mobius inversion: sum over d <= T of mu(d) * floor(T/d)^2.
    """
    if t_order < 1:
        raise ValueError(f"t_order must be >= 1, got {t_order}")
    mu = arith.mobius_table(t_order).values
    return sum(mu[d] * (t_order // d) ** 2 for d in range(1, t_order + 1))


def enumerate_coprime_pairs(t_order: int) -> Iterator[CoprimePair]:
    """Yield every coprime pair up to T exactly once, beta-major order."""
    if t_order < 1:
        raise ValueError(f"t_order must be >= 1, got {t_order}")
    for beta in range(1, t_order + 1):
        for alpha in range(1, t_order + 1):
            if math.gcd(alpha, beta) == 1:
                yield CoprimePair(alpha, beta)


def _check_histogram_args(t_order: int, p: int) -> None:
    if t_order < 1:
        raise ValueError(f"t_order must be >= 1, got {t_order}")
    if not arith.is_prime(p):
        raise ValueError(f"p must be prime, got {p}")


def residue_histogram(t_order: int, p: int, threads: int = 1) -> ResidueHistogram:
    """Histogram of alpha * beta^(-1) mod p over coprime pairs <= T, p not | beta.

    Single pass over beta with per-beta coprimality sieving; the beta range
    may be partitioned across threads, and the merged result is independent
    of the partitioning.
    """
    _check_histogram_args(t_order, p)
    if threads <= 1 or t_order < 4 * threads:
        counts = _kernels.coprime_histogram(t_order, p, 1, t_order + 1)
    else:
        bounds = [1 + (t_order * k) // threads for k in range(threads + 1)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(
                pool.map(
                    lambda span: _kernels.coprime_histogram(t_order, p, span[0], span[1]),
                    zip(bounds[:-1], bounds[1:]),
                )
            )
        counts = parts[0]
        for part in parts[1:]:
            counts = counts + part
    return ResidueHistogram(p=p, t_order=t_order, counts=tuple(int(c) for c in counts))


def residue_histogram_oracle(t_order: int, p: int) -> ResidueHistogram:
    """Brute-force reference for residue_histogram: double loop, per-pair gcd.

    Independent of the kernel lanes; refuses t_order > 10^4 because the work
    is quadratic.
    """
    _check_histogram_args(t_order, p)
    if t_order > ORACLE_T_LIMIT:
        raise ValueError(
            f"oracle refuses t_order={t_order} > {ORACLE_T_LIMIT} (quadratic cost)"
        )
    counts = [0] * p
    for beta in range(1, t_order + 1):
        if beta % p == 0:
            continue
        binv = pow(beta, -1, p)
        for alpha in range(1, t_order + 1):
            if math.gcd(alpha, beta) == 1:
                counts[alpha * binv % p] += 1
    return ResidueHistogram(p=p, t_order=t_order, counts=tuple(counts))


def _column_count(w: int, c: int, p: int) -> int:
    """#{alpha : 1 <= alpha <= w, alpha = c mod p} for 0 <= c < p."""
    if c == 0:
        return w // p
    if c <= w:
        return (w - c) // p + 1
    return 0


def m_count(w: int, p: int, d: int, v: int) -> int:
    """Pairs (alpha, beta) <= w with d | alpha, d | beta, p not | beta, alpha = v beta mod p.

    Zero when p | d; otherwise scaling by d reduces to the d = 1 count at
    width floor(w/d), evaluated column by column in O(w/d) time.
    """
    if w < 0:
        raise ValueError(f"w must be >= 0, got {w}")
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    if not 0 <= v < p:
        raise ValueError(f"v must lie in [0, {p}), got {v}")
    if d % p == 0:
        return 0
    w2 = w // d
    total = 0
    for beta in range(1, w2 + 1):
        if beta % p == 0:
            continue
        total += _column_count(w2, v * beta % p, p)
    return total


def _l1_sum(counts: Sequence[float], main_term: float) -> float:
    """Sum of |counts[v] - main_term| over v = 1..p-1 (v = 0 excluded)."""
    return float(sum(abs(counts[v] - main_term) for v in range(1, len(counts))))


def l1_discrepancy(t_order: int, p: int, threads: int = 1) -> float:
    """L1 distance of the nonzero residue counts from the (6/pi^2) T^2 / p main term."""
    hist = residue_histogram(t_order, p, threads=threads)
    return _l1_sum(hist.counts, hist.main_term)


def l2_m_deviation(w: int, p: int) -> float:
    """Sum over v = 1..p-1 of (M_{w,p,1}(v) - w^2/p)^2.

    Intended for desk scale (w <= 10^5, p <= 10^4). No threshold is asserted;
    callers compare the value against w^2 themselves.
    """
    if w < 1:
        raise ValueError(f"w must be >= 1, got {w}")
    if not arith.is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    m_all = _kernels.congruence_pair_counts(w, p)
    main = w * w / p
    return float(sum((int(m_all[v]) - main) ** 2 for v in range(1, p)))
