"""Averages of prime-counting functions over Farey-parametrized curve families.

Two independent computations of the same total are carried everywhere:

* direct: enumerate reduced fractions tau and count qualifying primes per tau;
* swapped: for each prime, weight qualifying residues v by the Farey
  histogram R_{T,p}(v).

Exchanging the two summations is an exact identity under this package's
conventions (primes dividing the denominator are skipped, goodness means
p does not divide Delta(v)), so the totals must agree to the integer; the
reports carry both. The per-residue Chebotarev tallies behind the same
machinery are exposed separately.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from . import arith, elliptic, farey, quadratic
from .elliptic import CurveFamily
from .farey import ResidueHistogram

__all__ = [
    "AverageReport",
    "ChebotarevReport",
    "PrimeContribution",
    "average_pi_a",
    "average_pi_field",
    "chebotarev_counts",
    "envelope",
]

# Below this prime the mod-ell image of the family is not guaranteed to be
# the full group, so equidistribution mod ell is heuristic only.
FULL_IMAGE_ELL_FLOOR = 17


@dataclass(frozen=True)
class PrimeContribution:
    """Per-prime row of an AverageReport."""

    p: int
    direct: int
    swapped: int
    good_v: int
    bad_v: int


@dataclass(frozen=True)
class AverageReport:
    """Totals of a prime-counting function summed over all tau in F(T)."""

    family_id: int
    mode: str  # "trace" or "field"
    param: int  # the target trace a, or the target squarefree d
    x: int
    t_order: int
    total_direct: int
    total_swapped: int
    normalized: float
    envelope: float
    skipped_primes: int  # (p, tau) pairs dropped because p | beta
    per_prime: tuple[PrimeContribution, ...]


@dataclass(frozen=True)
class ChebotarevReport:
    """Counts of good residues v mod p by trace residue a_p(v) mod ell."""

    p: int
    ell: int
    counts: tuple[int, ...]  # counts[a] for a = 0..ell-1
    main_term: float  # p / ell
    max_abs_dev: float
    good_v: int
    bad_v: int
    small_ell: bool  # ell < 17: tallies are heuristic only


@lru_cache(maxsize=256)
def _cached_trace_table(family: CurveFamily, p: int) -> elliptic.TraceTable:
    return elliptic.trace_table(family, p)


@lru_cache(maxsize=256)
def _cached_histogram(t_order: int, p: int) -> ResidueHistogram:
    return farey.residue_histogram(t_order, p)


def _prime_row(
    family: CurveFamily,
    p: int,
    t_order: int,
    pairs: list[tuple[int, int]],
    match: Callable[[int, int], bool],
) -> tuple[PrimeContribution, int]:
    """One prime's direct and swapped contributions, plus its skipped-pair count."""
    table = _cached_trace_table(family, p)
    hist = _cached_histogram(t_order, p)
    by_trace: dict[int, list[int]] = {}
    for v, entry in enumerate(table.entries):
        if entry is not None:
            assert entry * entry <= 4 * p  # Hasse, re-checked at tally time
            by_trace.setdefault(entry, []).append(v)
    matching: set[int] = set()
    for trace, vs in by_trace.items():
        if match(trace, p):
            matching.update(vs)
    swapped = sum(hist.counts[v] for v in matching)
    inv = arith.inverse_table(p)
    direct = 0
    skipped = 0
    for alpha, beta in pairs:
        if beta % p == 0:
            skipped += 1
            continue
        if (alpha % p) * inv[beta % p] % p in matching:
            direct += 1
    good = sum(1 for entry in table.entries if entry is not None)
    row = PrimeContribution(p=p, direct=direct, swapped=swapped, good_v=good, bad_v=p - good)
    return row, skipped


def _build_report(
    family: CurveFamily,
    mode: str,
    param: int,
    x: int,
    t_order: int,
    part: int,
    match: Callable[[int, int], bool],
    threads: int,
) -> AverageReport:
    if x < 1 or t_order < 1:
        raise ValueError("x and t_order must be >= 1")
    pairs = [(tau.alpha, tau.beta) for tau in farey.enumerate_coprime_pairs(t_order)]
    primes = [p for p in arith.primes_up_to(x) if p >= 5]
    if threads > 1 and len(primes) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(
                pool.map(lambda p: _prime_row(family, p, t_order, pairs, match), primes)
            )
    else:
        results = [_prime_row(family, p, t_order, pairs, match) for p in primes]
    rows = tuple(row for row, _ in results)
    skipped = sum(s for _, s in results)
    total_direct = sum(row.direct for row in rows)
    total_swapped = sum(row.swapped for row in rows)
    # the summation-order identity; see the module docstring
    assert total_direct == total_swapped, (total_direct, total_swapped)
    return AverageReport(
        family_id=family.family_id,
        mode=mode,
        param=param,
        x=x,
        t_order=t_order,
        total_direct=total_direct,
        total_swapped=total_swapped,
        normalized=total_direct / farey.count_coprime_pairs(t_order),
        envelope=envelope(t_order, x, part),
        skipped_primes=skipped,
        per_prime=rows,
    )


def average_pi_a(
    family: CurveFamily, a: int, x: int, t_order: int, threads: int = 1
) -> AverageReport:
    """Sum over tau in F(T) of the count of primes p <= x with a_p(tau) = a."""
    return _build_report(
        family, "trace", a, x, t_order, 1, lambda trace, _p: trace == a, threads
    )


def average_pi_field(
    family: CurveFamily, d: int, x: int, t_order: int, threads: int = 1
) -> AverageReport:
    """Sum over tau in F(T) of the count of primes p <= x whose Frobenius field is Q(sqrt(d))."""
    quadratic.field_of(d)  # validates d (squarefree, negative)

    def match(trace: int, p: int) -> bool:
        return trace != 0 and quadratic.frobenius_field(trace, p) == d

    return _build_report(family, "field", d, x, t_order, 3, match, threads)


def chebotarev_counts(
    family: CurveFamily, p: int, ell: int, threads: int = 1
) -> ChebotarevReport:
    """Tally good residues v by a_p(v) mod ell and compare against p/ell."""
    if ell == p:
        raise ValueError("ell must differ from p")
    if not arith.is_prime(ell):
        raise ValueError(f"ell must be prime, got {ell}")
    table = elliptic.trace_table(family, p, threads=threads)
    counts = [0] * ell
    good = 0
    for entry in table.entries:
        if entry is None:
            continue
        assert entry * entry <= 4 * p  # Hasse, re-checked at tally time
        good += 1
        counts[entry % ell] += 1
    main = p / ell
    max_dev = max(abs(c - main) for c in counts)
    return ChebotarevReport(
        p=p,
        ell=ell,
        counts=tuple(counts),
        main_term=main,
        max_abs_dev=max_dev,
        good_v=good,
        bad_v=p - good,
        small_ell=ell < FULL_IMAGE_ELL_FLOOR,
    )


def envelope(t_order: int, x: int, part: int) -> float:
    """Reference size envelope for the averaged totals.

    Part 1 is T^2 x^(3/4) + T x^(3/2); parts 2 and 3 are
    T^2 x^(2/3) + T x^(3/2). The sub-polynomial factor hiding in the
    exponents is set to 1, so this is context for plots, never an asserted
    bound.
    """
    t = float(t_order)
    xf = float(x)
    if part == 1:
        return t * t * xf**0.75 + t * xf**1.5
    if part in (2, 3):
        return t * t * xf ** (2.0 / 3.0) + t * xf**1.5
    raise ValueError(f"part must be 1, 2 or 3, got {part}")
