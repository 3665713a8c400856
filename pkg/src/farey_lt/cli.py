"""Command-line front end: flag validation, CSV/JSON emission, trace cache.

One subcommand per experiment; CSV is the golden output format and the JSON
mirrors it field for field. All validation happens before any computation,
so exit code 2 always means a bad invocation and 1 a failure while computing.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
import tempfile
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from . import arith, elliptic, farey, langtrotter, quadratic
from .arith import IntPolynomial
from .elliptic import CurveFamily

__all__ = ["CliConfig", "main", "parse_args", "run"]

_FAMILY_RE = re.compile(r"A=([0-9,+-]*);B=([0-9,+-]*)\Z")

SUBCOMMANDS = (
    "farey-hist",
    "discrepancy",
    "m-count",
    "traces",
    "lt-avg",
    "lt-field",
    "chebotarev",
    "lemma-poly",
    "classnum",
    "envelope",
)


@dataclass
class CliConfig:
    """A fully validated invocation; every field is ready to use."""

    subcommand: str
    family: Optional[CurveFamily] = None
    t: Optional[int] = None
    p: Optional[int] = None
    ell: Optional[int] = None
    a: Optional[int] = None
    d: Optional[int] = None
    x: Optional[int] = None
    hw: Optional[int] = None
    dmax: Optional[int] = None
    v: Optional[int] = None
    part: Optional[int] = None
    t_list: tuple[int, ...] = ()
    format: str = "csv"
    cache_dir: Optional[Path] = None
    threads: int = 1


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    common.add_argument("--cache-dir", default=None)

    parser = argparse.ArgumentParser(
        prog="farey-lt",
        description="Farey residue statistics and averaged Frobenius-trace experiments.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    sp = sub.add_parser("farey-hist", parents=[common], help="residue histogram of F(T) mod p")
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--p", type=int, required=True)

    sp = sub.add_parser("discrepancy", parents=[common], help="L1 discrepancy sweep over T")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--t-list", required=True, help="comma-separated T values")

    sp = sub.add_parser("m-count", parents=[common], help="congruence pair count M_{W,p,d}(v)")
    sp.add_argument("--t", type=int, required=True, help="width W")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--v", type=int, required=True)

    sp = sub.add_parser("traces", parents=[common], help="trace table of a family mod p")
    sp.add_argument("--family", required=True)
    sp.add_argument("--p", type=int, required=True)

    sp = sub.add_parser("lt-avg", parents=[common], help="averaged fixed-trace prime counts")
    sp.add_argument("--family", required=True)
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--x", type=int, required=True)
    sp.add_argument("--t", type=int, required=True)

    sp = sub.add_parser("lt-field", parents=[common], help="averaged fixed-field prime counts")
    sp.add_argument("--family", required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--x", type=int, required=True)
    sp.add_argument("--t", type=int, required=True)

    sp = sub.add_parser("chebotarev", parents=[common], help="trace residues mod ell across v")
    sp.add_argument("--family", required=True)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--ell", type=int, required=True)

    sp = sub.add_parser("lemma-poly", parents=[common], help="power-identity polynomial")
    sp.add_argument("--hw", type=int, required=True)

    sp = sub.add_parser("classnum", parents=[common], help="class number table for |D| <= dmax")
    sp.add_argument("--dmax", type=int, required=True)

    sp = sub.add_parser("envelope", parents=[common], help="reference bound envelope")
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--x", type=int, required=True)
    sp.add_argument("--part", type=int, required=True)

    return parser


def _parse_family(text: str, fail) -> CurveFamily:
    match = _FAMILY_RE.match(text)
    if match is None:
        fail("--family must look like 'A=<coeffs>;B=<coeffs>' (ascending, comma-separated)")
    try:
        a_poly = IntPolynomial.parse(match.group(1))
        b_poly = IntPolynomial.parse(match.group(2))
        return elliptic.family_validate(a_poly, b_poly)
    except ValueError as exc:
        fail(f"invalid --family: {exc}")


def parse_args(argv: list[str]) -> CliConfig:
    """Parse and fully validate argv; exits with code 2 on any usage error."""
    parser = _build_parser()
    ns = parser.parse_args(argv)
    fail = parser.error  # prints to stderr and exits 2
    cmd = ns.subcommand

    config = CliConfig(subcommand=cmd, format=ns.format, threads=ns.threads)
    if config.threads < 1:
        fail("--threads must be >= 1")
    env_cache = os.environ.get("FAREY_LT_CACHE")
    raw_cache = env_cache if env_cache else ns.cache_dir
    if raw_cache:
        config.cache_dir = Path(raw_cache)

    if hasattr(ns, "family"):
        config.family = _parse_family(ns.family, fail)

    if hasattr(ns, "t"):
        if ns.t < 1:
            fail("--t must be >= 1")
        config.t = ns.t
    if hasattr(ns, "x"):
        if ns.x < 1:
            fail("--x must be >= 1")
        config.x = ns.x
    if hasattr(ns, "p"):
        if not arith.is_prime(ns.p):
            fail("--p must be prime")
        if cmd in ("traces", "chebotarev") and ns.p < 5:
            fail("--p must be >= 5 for curve reductions")
        config.p = ns.p
    if hasattr(ns, "ell"):
        if not arith.is_prime(ns.ell):
            fail("--ell must be prime")
        if ns.ell == config.p:
            fail("--ell must differ from --p")
        config.ell = ns.ell
    if hasattr(ns, "a"):
        config.a = ns.a
    if hasattr(ns, "d"):
        if cmd == "m-count":
            if ns.d < 1:
                fail("--d must be >= 1")
        else:
            if ns.d >= 0 or arith.squarefree_kernel(ns.d) != ns.d:
                fail("--d must be a negative squarefree integer")
        config.d = ns.d
    if hasattr(ns, "v"):
        if not 0 <= ns.v < config.p:
            fail("--v must lie in [0, p)")
        config.v = ns.v
    if hasattr(ns, "hw"):
        if ns.hw < 1:
            fail("--hw must be >= 1")
        config.hw = ns.hw
    if hasattr(ns, "dmax"):
        if ns.dmax < 3:
            fail("--dmax must be >= 3")
        config.dmax = ns.dmax
    if hasattr(ns, "part"):
        if ns.part not in (1, 2, 3):
            fail("--part must be 1, 2 or 3")
        config.part = ns.part
    if hasattr(ns, "t_list"):
        try:
            values = tuple(int(s) for s in ns.t_list.split(","))
        except ValueError:
            fail("--t-list must be comma-separated integers")
        if not values or any(t < 1 for t in values):
            fail("--t-list entries must be >= 1")
        config.t_list = values

    return config


# -- renderers ----------------------------------------------------------------


def _json_line(payload: dict) -> str:
    return json.dumps(payload) + "\n"


def _cmd_farey_hist(config: CliConfig) -> str:
    hist = farey.residue_histogram(config.t, config.p, threads=config.threads)
    if config.format == "json":
        return _json_line(
            {
                "t": hist.t_order,
                "p": hist.p,
                "main_term": hist.main_term,
                "rows": [{"v": v, "count": c} for v, c in enumerate(hist.counts)],
            }
        )
    lines = ["v,count"]
    lines.extend(f"{v},{c}" for v, c in enumerate(hist.counts))
    lines.append(f"# T={hist.t_order} p={hist.p} main_term={hist.main_term!r}")
    return "\n".join(lines) + "\n"


def _cmd_discrepancy(config: CliConfig) -> str:
    rows = []
    for t in config.t_list:
        pairs = farey.count_coprime_pairs(t)
        l1 = farey.l1_discrepancy(t, config.p, threads=config.threads)
        rows.append((t, pairs, l1, l1 / pairs))
    if config.format == "json":
        return _json_line(
            {
                "p": config.p,
                "rows": [
                    {"t": t, "pairs": pairs, "l1": l1, "l1_per_pair": ratio}
                    for t, pairs, l1, ratio in rows
                ],
            }
        )
    lines = ["T,pairs,l1,l1_per_pair"]
    lines.extend(f"{t},{pairs},{l1!r},{ratio!r}" for t, pairs, l1, ratio in rows)
    lines.append(f"# p={config.p}")
    return "\n".join(lines) + "\n"


def _cmd_m_count(config: CliConfig) -> str:
    count = farey.m_count(config.t, config.p, config.d, config.v)
    if config.format == "json":
        return _json_line(
            {"w": config.t, "p": config.p, "d": config.d, "v": config.v, "count": count}
        )
    return "W,p,d,v,count\n" f"{config.t},{config.p},{config.d},{config.v},{count}\n"


def _trace_cache_path(config: CliConfig) -> Optional[Path]:
    if config.cache_dir is None:
        return None
    return config.cache_dir / f"trace-{config.family.family_id}-p{config.p}.csv"


def _cmd_traces(config: CliConfig) -> str:
    family = config.family
    expected_ser = f"{family.a_poly.serialize()};{family.b_poly.serialize()}"
    cache_path = _trace_cache_path(config)
    table = None
    if cache_path is not None and cache_path.exists():
        try:
            cached_ser, cached = elliptic.parse_trace_cache(
                cache_path.read_text(encoding="utf-8")
            )
            if cached_ser == expected_ser and cached.p == config.p:
                table = cached
        except ValueError:
            table = None  # stale or foreign file; recompute and overwrite
    if table is None:
        table = elliptic.trace_table(family, config.p, threads=config.threads)
        if cache_path is not None:
            cache_path.parent.mkdir(parents=True, exist_ok=True)
            text = elliptic.format_trace_cache(family, table)
            fd, tmp_name = tempfile.mkstemp(dir=cache_path.parent, suffix=".tmp")
            try:
                with os.fdopen(fd, "w", encoding="utf-8") as handle:
                    handle.write(text)
                os.replace(tmp_name, cache_path)
            except OSError:
                if os.path.exists(tmp_name):
                    os.unlink(tmp_name)
                raise
    if config.format == "json":
        return _json_line(
            {
                "family": expected_ser,
                "p": table.p,
                "hash": table.family_id,
                "rows": [
                    {"v": v, "a": elliptic.BAD_ENTRY_TEXT if e is None else e}
                    for v, e in enumerate(table.entries)
                ],
            }
        )
    return elliptic.format_trace_cache(family, table)


def _render_average(config: CliConfig, report: langtrotter.AverageReport) -> str:
    param_key = "a" if report.mode == "trace" else "d"
    if config.format == "json":
        return _json_line(
            {
                "family_hash": report.family_id,
                "mode": report.mode,
                param_key: report.param,
                "x": report.x,
                "t": report.t_order,
                "total": report.total_direct,
                "normalized": report.normalized,
                "envelope": report.envelope,
                "skipped": report.skipped_primes,
                "rows": [
                    {
                        "p": row.p,
                        "contribution_direct": row.direct,
                        "contribution_swapped": row.swapped,
                        "good_v": row.good_v,
                        "bad_v": row.bad_v,
                    }
                    for row in report.per_prime
                ],
            }
        )
    lines = ["p,contribution_direct,contribution_swapped,good_v,bad_v"]
    lines.extend(
        f"{row.p},{row.direct},{row.swapped},{row.good_v},{row.bad_v}"
        for row in report.per_prime
    )
    lines.append(f"# family_hash={report.family_id} mode={report.mode} {param_key}={report.param} x={report.x} T={report.t_order}")
    lines.append(
        f"# total={report.total_direct}, normalized={report.normalized!r},"
        f" envelope={report.envelope!r}, skipped={report.skipped_primes}"
    )
    return "\n".join(lines) + "\n"


def _cmd_lt_avg(config: CliConfig) -> str:
    report = langtrotter.average_pi_a(
        config.family, config.a, config.x, config.t, threads=config.threads
    )
    return _render_average(config, report)


def _cmd_lt_field(config: CliConfig) -> str:
    report = langtrotter.average_pi_field(
        config.family, config.d, config.x, config.t, threads=config.threads
    )
    return _render_average(config, report)


def _cmd_chebotarev(config: CliConfig) -> str:
    report = langtrotter.chebotarev_counts(
        config.family, config.p, config.ell, threads=config.threads
    )
    if config.format == "json":
        return _json_line(
            {
                "family_hash": config.family.family_id,
                "p": report.p,
                "ell": report.ell,
                "main_term": report.main_term,
                "max_abs_dev": report.max_abs_dev,
                "good_v": report.good_v,
                "bad_v": report.bad_v,
                "small_ell": report.small_ell,
                "rows": [{"a": a, "count": c} for a, c in enumerate(report.counts)],
            }
        )
    lines = ["a,count"]
    lines.extend(f"{a},{c}" for a, c in enumerate(report.counts))
    lines.append(f"# family_hash={config.family.family_id}")
    lines.append(
        f"# p={report.p} ell={report.ell} main_term={report.main_term!r}"
        f" max_abs_dev={report.max_abs_dev!r} good_v={report.good_v}"
        f" bad_v={report.bad_v} small_ell={'true' if report.small_ell else 'false'}"
    )
    return "\n".join(lines) + "\n"


def _cmd_lemma_poly(config: CliConfig) -> str:
    poly = quadratic.lemma_poly(config.hw)
    if config.format == "json":
        return _json_line({"hw": config.hw, "coeffs": list(poly.coeffs)})
    return poly.serialize() + "\n"


def _cmd_classnum(config: CliConfig) -> str:
    rows = []
    for n in range(3, config.dmax + 1):
        if n % 4 in (0, 3):  # exactly the D = -n with D = 0 or 1 mod 4
            rows.append((-n, quadratic.class_number(-n)))
    if config.format == "json":
        return _json_line({"dmax": config.dmax, "rows": [{"D": d, "h": h} for d, h in rows]})
    lines = ["D,h"]
    lines.extend(f"{d},{h}" for d, h in rows)
    return "\n".join(lines) + "\n"


def _cmd_envelope(config: CliConfig) -> str:
    value = langtrotter.envelope(config.t, config.x, config.part)
    if config.format == "json":
        return _json_line(
            {"part": config.part, "t": config.t, "x": config.x, "envelope": value}
        )
    return "part,T,x,envelope\n" f"{config.part},{config.t},{config.x},{value!r}\n"


_HANDLERS = {
    "farey-hist": _cmd_farey_hist,
    "discrepancy": _cmd_discrepancy,
    "m-count": _cmd_m_count,
    "traces": _cmd_traces,
    "lt-avg": _cmd_lt_avg,
    "lt-field": _cmd_lt_field,
    "chebotarev": _cmd_chebotarev,
    "lemma-poly": _cmd_lemma_poly,
    "classnum": _cmd_classnum,
    "envelope": _cmd_envelope,
}


def run(config: CliConfig) -> int:
    """Execute a validated invocation; returns the process exit code."""
    try:
        text = _HANDLERS[config.subcommand](config)
        sys.stdout.write(text)
        sys.stdout.flush()
    except (OSError, ValueError) as exc:
        print(f"farey-lt: error: {exc}", file=sys.stderr)
        return 1
    return 0


def main(argv: Optional[list[str]] = None) -> None:
    config = parse_args(sys.argv[1:] if argv is None else argv)
    sys.exit(run(config))
