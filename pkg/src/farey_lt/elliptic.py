"""One-parameter curve families y^2 = x^3 + A(t) x + B(t) and their traces mod p.

A validated family carries its discriminant polynomial -16(4A^3 + 27B^2) and
is specialized at residues v mod p; the trace of Frobenius a_p = p + 1 - #E
is computed from a shared quadratic-character table, which turns whole-table
builds (all v mod p) into array lookups.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

from . import _kernels, arith
from .arith import IntPolynomial
from .farey import CoprimePair

__all__ = [
    "BAD_ENTRY_TEXT",
    "ConstantJInvariant",
    "CurveFamily",
    "DeltaIdenticallyZero",
    "PrimeTooSmall",
    "SpecializedCurve",
    "TRACE_CACHE_MAGIC",
    "TraceTable",
    "family_validate",
    "format_trace_cache",
    "parse_trace_cache",
    "pi_a",
    "specialize_mod_p",
    "trace_of_frobenius",
    "trace_table",
]


class PrimeTooSmall(ValueError):
    """Specialization is only defined for p >= 5."""


class DeltaIdenticallyZero(ValueError):
    """The family is singular: -16(4A^3 + 27B^2) vanishes identically."""


class ConstantJInvariant(ValueError):
    """The j-invariant of the family is a constant rational."""


@dataclass(frozen=True)
class CurveFamily:
    """Validated family: A(t), B(t) and the derived discriminant Delta(t)."""

    a_poly: IntPolynomial
    b_poly: IntPolynomial
    delta_poly: IntPolynomial

    def serialize(self) -> str:
        """Canonical wire form, also the preimage of the family hash."""
        return f"A={self.a_poly.serialize()};B={self.b_poly.serialize()}"

    @property
    def family_id(self) -> int:
        """64-bit FNV-1a hash of the canonical serialization."""
        return arith.fnv1a64(self.serialize())


@dataclass(frozen=True)
class SpecializedCurve:
    """A non-singular curve y^2 = x^3 + a4 x + a6 over F_p, p >= 5."""

    a4: int
    a6: int
    p: int


@dataclass(frozen=True)
class TraceTable:
    """Traces a_p(v) for v = 0..p-1; None marks bad reduction (p | Delta(v))."""

    p: int
    family_id: int
    entries: tuple[Optional[int], ...]


def family_validate(a_poly: IntPolynomial, b_poly: IntPolynomial) -> CurveFamily:
    """Build a CurveFamily, rejecting singular families and constant j.

    Constancy of j reduces to linear dependence of A^3 and 4A^3 + 27B^2
    over the rationals, which sidesteps the sign convention of j entirely.
    """
    a_cubed = a_poly**3
    c_poly = 4 * a_cubed + 27 * b_poly**2
    delta = -16 * c_poly
    if delta.is_zero():
        raise DeltaIdenticallyZero("family discriminant -16(4A^3 + 27B^2) is identically zero")
    if arith.poly_pair_dependent(a_cubed, c_poly):
        raise ConstantJInvariant("family has constant j-invariant")
    return CurveFamily(a_poly=a_poly, b_poly=b_poly, delta_poly=delta)


def specialize_mod_p(family: CurveFamily, v: int, p: int) -> Optional[SpecializedCurve]:
    """Reduce the family at t = v over F_p; None when Delta(v) = 0 mod p."""
    if p < 5:
        raise PrimeTooSmall(f"specialization requires p >= 5, got {p}")
    if arith.poly_eval_mod(family.delta_poly, v, p) == 0:
        return None
    return SpecializedCurve(
        a4=arith.poly_eval_mod(family.a_poly, v, p),
        a6=arith.poly_eval_mod(family.b_poly, v, p),
        p=p,
    )


def trace_of_frobenius(curve: SpecializedCurve) -> int:
    """a_p = p + 1 - #E(F_p), evaluated as -sum_x chi(x^3 + a4 x + a6)."""
    return int(_kernels.trace_batch(curve.p, [curve.a4], [curve.a6])[0])


def trace_table(family: CurveFamily, p: int, threads: int = 1) -> TraceTable:
    """Traces for every residue v mod p, sharing one character table.

    The v-range may be split across threads; entries land in pre-sized
    storage, so the table is identical for any worker count.
    """
    if p < 5:
        raise PrimeTooSmall(f"trace tables require p >= 5, got {p}")
    a4s = [arith.poly_eval_mod(family.a_poly, v, p) for v in range(p)]
    a6s = [arith.poly_eval_mod(family.b_poly, v, p) for v in range(p)]
    deltas = [arith.poly_eval_mod(family.delta_poly, v, p) for v in range(p)]
    if threads <= 1 or p < 4 * threads:
        raw = _kernels.trace_batch(p, a4s, a6s)
    else:
        bounds = [(p * k) // threads for k in range(threads + 1)]
        spans = list(zip(bounds[:-1], bounds[1:]))
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(
                pool.map(lambda span: _kernels.trace_batch(p, a4s[span[0] : span[1]], a6s[span[0] : span[1]]), spans)
            )
        raw = [t for part in parts for t in part]
    entries = tuple(
        None if deltas[v] == 0 else int(raw[v]) for v in range(p)
    )
    return TraceTable(p=p, family_id=family.family_id, entries=entries)


def pi_a(family: CurveFamily, tau: CoprimePair, a: int, x: int) -> int:
    """Number of primes 5 <= p <= x of good reduction at tau with a_p = a.

    tau = alpha/beta is reduced mod p as v = alpha * beta^(-1); primes
    dividing beta are skipped, as are primes where Delta(v) = 0 mod p.
    """
    count = 0
    for p in arith.primes_up_to(x):
        if p < 5 or tau.beta % p == 0:
            continue
        v = tau.alpha * pow(tau.beta, -1, p) % p
        curve = specialize_mod_p(family, v, p)
        if curve is not None and trace_of_frobenius(curve) == a:
            count += 1
    return count


# -- trace-cache wire format -------------------------------------------------

TRACE_CACHE_MAGIC = "# farey-lt trace-cache v1"
BAD_ENTRY_TEXT = "BAD"


def format_trace_cache(family: CurveFamily, table: TraceTable) -> str:
    """Render a trace table in the cache file format (bit-exact round trip)."""
    lines = [
        TRACE_CACHE_MAGIC,
        f"# family={family.a_poly.serialize()};{family.b_poly.serialize()}"
        f" p={table.p} hash={table.family_id}",
    ]
    for v, entry in enumerate(table.entries):
        lines.append(f"{v},{BAD_ENTRY_TEXT if entry is None else entry}")
    return "\n".join(lines) + "\n"


def parse_trace_cache(text: str) -> tuple[str, TraceTable]:
    """Parse the cache format; returns (family serialization, table).

    Raises ValueError on any malformed header or row.
    """
    lines = text.splitlines()
    if len(lines) < 2 or lines[0] != TRACE_CACHE_MAGIC:
        raise ValueError("not a farey-lt trace-cache file")
    meta = lines[1]
    if not meta.startswith("# family="):
        raise ValueError("malformed trace-cache metadata line")
    fields = meta[2:].split(" ")
    family_ser = fields[0][len("family=") :]
    p = int(fields[1][len("p=") :])
    family_id = int(fields[2][len("hash=") :])
    if len(lines) != 2 + p:
        raise ValueError(f"expected {p} trace rows, found {len(lines) - 2}")
    entries: list[Optional[int]] = []
    for v, line in enumerate(lines[2:]):
        idx_text, _, entry_text = line.partition(",")
        if int(idx_text) != v:
            raise ValueError(f"trace row {v} is out of order")
        entries.append(None if entry_text == BAD_ENTRY_TEXT else int(entry_text))
    return family_ser, TraceTable(p=p, family_id=family_id, entries=tuple(entries))
