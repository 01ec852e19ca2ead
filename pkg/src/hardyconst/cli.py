"""Command-line front end.

Four subcommands: ``compute`` emits best-constant tables over a range of
dimensions, ``verify`` runs the named invariant suites, ``exact`` prints the
rational sequence values, and ``asymptotics`` tabulates the gap 4 - constant
against powers of log n for external analysis.

Output is byte-stable for a fixed command line: reals are printed with 17
significant digits and row order is deterministic even when rows are
computed in parallel.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, fields, replace

from . import exact, hardy
from .eigensolve import EigenSolveError
from .verify import CORRUPTIBLE_CHECKS, VerifyScale, check_names, run_verification

__all__ = ["RunConfig", "main", "cmd_compute", "cmd_verify", "cmd_exact", "cmd_asymptotics"]

_COLUMNS = (
    "n",
    "kind",
    "constant",
    "thm_lower",
    "thm_upper",
    "lambda_min",
    "m_used",
    "iterations",
    "tol",
)
_ASYMPTOTIC_COLUMNS = (
    "n",
    "gap_c",
    "gap_d",
    "ln_n",
    "ln_n_sq",
    "gap_c_times_ln",
    "gap_c_times_ln_sq",
    "gap_d_times_ln",
    "gap_d_times_ln_sq",
)
_SEQUENCE_MIN_INDEX = {"detD": 1, "detG": 1, "y": 1, "delta": 1, "q1": 0, "u": 0}


@dataclass(frozen=True)
class RunConfig:
    """Parsed command line, one object for every subcommand."""

    command: str
    n: int | None = None
    start: int | None = None
    stop: int | None = None
    grid: str = "linear"
    step: int = 1
    ratio: float = 2.0
    kind: str = "both"
    tol: float = 1e-12
    fmt: str = "csv"
    out: str | None = None
    threads: int = 1
    seed: int = 0
    quick: bool = False
    max_m: int | None = None
    corrupt: str | None = None
    only: tuple[str, ...] | None = None
    list_checks: bool = False
    what: str | None = None
    index: int | None = None
    upto: int | None = None


def _fmt_real(value: float) -> str:
    return format(value, ".17g")


def _fmt_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return _fmt_real(value)
    return str(value)


def _fmt_rational(value) -> str:
    return f"{value.numerator}/{value.denominator}"


def _approx(value) -> float:
    try:
        return float(value)
    except OverflowError:
        return math.inf


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)


def _grid_values(cfg: RunConfig) -> list[int]:
    if cfg.n is not None:
        return [cfg.n]
    if cfg.grid == "linear":
        return list(range(cfg.start, cfg.stop + 1, cfg.step))
    values = []
    v = cfg.start
    x = float(v)
    while v <= cfg.stop:
        values.append(v)
        x *= cfg.ratio
        v = max(int(round(x)), v + 1)
    return values


def _rows_text(columns, rows, fmt: str) -> str:
    if fmt == "csv":
        lines = [",".join(columns)]
        lines.extend(",".join(_fmt_cell(v) for v in row) for row in rows)
        return "\n".join(lines) + "\n"
    payload = [dict(zip(columns, row)) for row in rows]
    return json.dumps(payload, indent=2) + "\n"


# ---------------------------------------------------------------------------
# subcommands


def cmd_compute(cfg: RunConfig) -> int:
    kinds = ("continuous", "discrete") if cfg.kind == "both" else (cfg.kind,)
    tasks = [(n, kind) for n in _grid_values(cfg) for kind in kinds]

    def worker(task):
        n, kind = task
        if kind == "continuous":
            return hardy.continuous_constant(n, cfg.tol)
        return hardy.discrete_constant(n, cfg.tol)

    if cfg.threads > 1:
        with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
            records = list(pool.map(worker, tasks))
    else:
        records = [worker(t) for t in tasks]

    rows = [
        (r.n, r.kind, r.constant, r.thm_lower, r.thm_upper, r.lambda_min, r.m_used, r.iterations, r.tol)
        for r in records
    ]
    _emit(_rows_text(_COLUMNS, rows, cfg.fmt), cfg.out)
    return 0


def cmd_verify(cfg: RunConfig) -> int:
    if cfg.list_checks:
        for name in check_names():
            print(name)
        return 0
    scale = VerifyScale.quick(cfg.seed, cfg.tol) if cfg.quick else VerifyScale(seed=cfg.seed, tol=cfg.tol)
    if cfg.max_m is not None:
        scale = replace(scale, exact=cfg.max_m)
    names = list(cfg.only) if cfg.only else None
    results = run_verification(scale, corrupt=cfg.corrupt, names=names)
    failures = 0
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        failures += 0 if result.passed else 1
        print(f"{status} {result.name}: {result.detail}")
    print(f"{len(results) - failures}/{len(results)} checks passed")
    return 0 if failures == 0 else 1


def _sequence_table(what: str, upto: int):
    if what == "detD":
        return exact.det_D_seq(upto)
    if what == "detG":
        return exact.det_G_seq(upto)
    if what == "y":
        return exact.y_seq(upto)
    if what == "q1":
        return exact.q1_seq(upto)
    if what == "delta":
        return exact.delta_seq(upto)
    return exact.u_seq(upto)


def _sequence_value(what: str, index: int):
    if what == "detD":
        return exact.det_D(index)
    if what == "detG":
        return exact.det_G(index)
    if what == "q1":
        return exact.q1(index)
    return _sequence_table(what, max(index, 1))[index]


def cmd_exact(cfg: RunConfig) -> int:
    if cfg.upto is not None:
        table = _sequence_table(cfg.what, cfg.upto)
        lines = ["index,exact,approx"]
        for i in table.indices():
            value = table[i]
            lines.append(f"{i},{_fmt_rational(value)},{_fmt_real(_approx(value))}")
        _emit("\n".join(lines) + "\n", cfg.out)
        return 0
    value = _sequence_value(cfg.what, cfg.index)
    _emit(f"{_fmt_rational(value)}\t{_fmt_real(_approx(value))}\n", cfg.out)
    return 0


def cmd_asymptotics(cfg: RunConfig) -> int:
    ns = _grid_values(cfg)

    def worker(n):
        c = hardy.continuous_constant(n, cfg.tol).constant
        d = hardy.discrete_constant(n, cfg.tol).constant
        return c, d

    if cfg.threads > 1:
        with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
            constants = list(pool.map(worker, ns))
    else:
        constants = [worker(n) for n in ns]

    rows = []
    for n, (c, d) in zip(ns, constants):
        gap_c, gap_d = 4.0 - c, 4.0 - d
        ln = math.log(n)
        rows.append(
            (n, gap_c, gap_d, ln, ln * ln, gap_c * ln, gap_c * ln * ln, gap_d * ln, gap_d * ln * ln)
        )
    _emit(_rows_text(_ASYMPTOTIC_COLUMNS, rows, cfg.fmt), cfg.out)
    return 0


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hardyconst",
        description="Best constants of the finite-dimensional Hardy inequalities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("compute", help="compute best constants over a range of dimensions")
    pc.add_argument("--n", type=int, help="single dimension (alternative to --start/--stop)")
    pc.add_argument("--start", type=int, help="first dimension of the range")
    pc.add_argument("--stop", type=int, help="last dimension of the range")
    pc.add_argument("--grid", choices=("linear", "geometric"), default="linear")
    pc.add_argument("--step", type=int, default=1, help="linear grid step")
    pc.add_argument("--ratio", type=float, default=2.0, help="geometric grid ratio (> 1)")
    pc.add_argument("--kind", choices=("continuous", "discrete", "both"), default="both")
    pc.add_argument("--tol", type=float, default=1e-12, help="bisection bracket width")
    pc.add_argument("--format", dest="fmt", choices=("csv", "json"), default="csv")
    pc.add_argument("--out", help="output path (default: stdout)")
    pc.add_argument("--threads", type=int, default=1, help="parallel row computations")

    pv = sub.add_parser("verify", help="run the named verification suites")
    pv.add_argument("--quick", action="store_true", help="reduced problem sizes")
    pv.add_argument("--seed", type=int, default=0, help="seed for randomized property checks")
    pv.add_argument("--tol", type=float, default=1e-12)
    pv.add_argument("--max-m", dest="max_m", type=int, help="cap for the exact-table checks")
    pv.add_argument(
        "--corrupt",
        choices=CORRUPTIBLE_CHECKS,
        help="deliberately damage this check's input (negative control; the run must FAIL it)",
    )
    pv.add_argument(
        "--only",
        action="append",
        metavar="CHECK",
        choices=check_names(),
        help="run only this check (repeatable)",
    )
    pv.add_argument("--list-checks", action="store_true", help="list check names and exit")

    pe = sub.add_parser("exact", help="print exact rational sequence values")
    pe.add_argument(
        "--what", required=True, choices=("detD", "detG", "y", "q1", "delta", "u")
    )
    pe.add_argument("--m", "--k", dest="index", type=int, help="single index to print")
    pe.add_argument("--upto", type=int, help="print a CSV table of all indices up to this one")
    pe.add_argument("--out", help="output path (default: stdout)")

    pa = sub.add_parser("asymptotics", help="tabulate 4 - constant against powers of log n")
    pa.add_argument("--start", type=int, default=10)
    pa.add_argument("--stop", type=int, default=100_000)
    pa.add_argument("--ratio", type=float, default=10.0)
    pa.add_argument("--tol", type=float, default=1e-12)
    pa.add_argument("--format", dest="fmt", choices=("csv", "json"), default="csv")
    pa.add_argument("--out", help="output path (default: stdout)")
    pa.add_argument("--threads", type=int, default=1)

    return parser


def _config_from_args(parser: argparse.ArgumentParser, ns: argparse.Namespace) -> RunConfig:
    known = {f.name for f in fields(RunConfig)}
    values = {k: v for k, v in vars(ns).items() if k in known and v is not None}
    if "only" in values:
        values["only"] = tuple(values["only"])
    cfg = RunConfig(**values)

    if cfg.tol <= 0:
        parser.error("--tol must be positive")
    if cfg.threads < 1:
        parser.error("--threads must be at least 1")

    if cfg.command == "compute":
        if (cfg.n is None) == (cfg.start is None and cfg.stop is None):
            parser.error("provide either --n or a --start/--stop range")
        if cfg.n is not None:
            if cfg.n < 1:
                parser.error("--n must be at least 1")
        else:
            if cfg.start is None or cfg.stop is None:
                parser.error("a range needs both --start and --stop")
            if cfg.start < 1 or cfg.stop < cfg.start:
                parser.error("need 1 <= start <= stop")
            if cfg.grid == "geometric" and cfg.ratio <= 1.0:
                parser.error("--ratio must exceed 1 for a geometric grid")
            if cfg.grid == "linear" and cfg.step < 1:
                parser.error("--step must be at least 1")
    elif cfg.command == "asymptotics":
        if cfg.start < 1 or cfg.stop < cfg.start:
            parser.error("need 1 <= start <= stop")
        if cfg.ratio <= 1.0:
            parser.error("--ratio must exceed 1")
        cfg = replace(cfg, grid="geometric")
    elif cfg.command == "exact":
        if (cfg.index is None) == (cfg.upto is None):
            parser.error("provide exactly one of --m/--k or --upto")
        low = _SEQUENCE_MIN_INDEX[cfg.what]
        if cfg.index is not None and cfg.index < low:
            parser.error(f"index for {cfg.what} starts at {low}")
        if cfg.upto is not None and cfg.upto < max(low, 1):
            parser.error(f"--upto for {cfg.what} must be at least {max(low, 1)}")
    return cfg


_DISPATCH = {
    "compute": cmd_compute,
    "verify": cmd_verify,
    "exact": cmd_exact,
    "asymptotics": cmd_asymptotics,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        cfg = _config_from_args(parser, parser.parse_args(argv))
    except SystemExit as exc:  # argparse already printed its message
        return int(exc.code or 0)
    try:
        return _DISPATCH[cfg.command](cfg)
    except EigenSolveError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
