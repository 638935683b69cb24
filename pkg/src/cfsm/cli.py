"""Command-line driver.

Subcommands::

    approximate   dump expansion coefficients (with constraint ordering labels)
    convergence   error indexes for every truncation in --terms, plus plot data
    compare       composite vs direct error indexes at the largest truncation

Exit codes: 0 success, 2 usage/configuration error, 3 numerical failure.
The environment variable ``CFSM_THREADS`` sets the number of worker threads
used across (sample, truncation) jobs; output is always written in a fixed
order from the main thread.
"""
from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from pathlib import Path

import numpy as np

from .basis import boundary_rows_1d, corner_rows
from .direct import build_direct
from .domain import axis_kinds, check_order
from .errors import CFSMError, NumericalError, UnknownSample
from .metrics import ErrorReport, error_report, make_grid
from .samples import SAMPLE_IDS, get_sample
from .series1d import build_composite_1d
from .series2d import build_composite_2d

THREADS_ENV = "CFSM_THREADS"
DEFAULT_TERMS = (2, 3, 5, 10, 20, 30, 40)
#: sampling points per axis when --grid is not given
DEFAULT_GRID_2D = 101
DEFAULT_GRID_1D = 10001
CSV_COLUMNS = ("sample", "method", "M", "N", "index_name", "subset", "value")
METHODS = ("composite", "direct")
DEGENERATE = "degenerate"


class ConfigError(CFSMError, ValueError):
    """Invalid command-line or config-file settings."""


@dataclass(frozen=True)
class StudyConfig:
    samples: tuple[int, ...]
    methods: tuple[str, ...]
    r: int = 3
    terms: tuple[int, ...] = DEFAULT_TERMS
    grid: int | None = None
    out: Path = Path("cfsm_out")
    formats: tuple[str, ...] = ("csv",)

    def grid_for(self, dim: int) -> int:
        if self.grid is not None:
            return self.grid
        return DEFAULT_GRID_1D if dim == 1 else DEFAULT_GRID_2D


# -- configuration ---------------------------------------------------------

def _parse_samples(text: str) -> tuple[int, ...]:
    if text == "all":
        return SAMPLE_IDS
    try:
        ids = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise ConfigError(f"bad sample list {text!r}") from None
    for i in ids:
        if i not in SAMPLE_IDS:
            raise ConfigError(f"unknown sample {i}; expected 1..8 or 'all'")
    return ids


def _parse_terms(text: str) -> tuple[int, ...]:
    try:
        terms = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise ConfigError(f"bad truncation list {text!r}") from None
    if not terms or any(t < 0 for t in terms) or list(terms) != sorted(set(terms)):
        raise ConfigError("truncation list must be nonempty, nonnegative and strictly ascending")
    return terms


def _parse_methods(text: str) -> tuple[str, ...]:
    if text == "both":
        return METHODS
    if text not in METHODS:
        raise ConfigError(f"unknown method {text!r}")
    return (text,)


def _parse_formats(text: str) -> tuple[str, ...]:
    if text == "both":
        return ("csv", "json")
    if text not in ("csv", "json"):
        raise ConfigError(f"unknown format {text!r}")
    return (text,)


def read_config_file(path: str | Path) -> dict[str, str]:
    """``key = value`` lines; blank lines and ``#`` comments are skipped."""
    out = {}
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config file: {exc}") from None
    for n, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{n}: expected key=value")
        key, value = (s.strip() for s in line.split("=", 1))
        out[key.replace("-", "_")] = value
    return out


def build_config(args: argparse.Namespace) -> StudyConfig:
    raw = {
        "sample": args.sample, "method": args.method, "r": args.r, "terms": args.terms,
        "grid": args.grid, "out": args.out, "format": args.format,
    }
    if args.config:
        extra = read_config_file(args.config)
        unknown = set(extra) - set(raw)
        if unknown:
            raise ConfigError(f"unknown config keys: {', '.join(sorted(unknown))}")
        raw.update(extra)
    try:
        r = check_order(int(raw["r"]))
        grid = None if raw["grid"] in (None, "", "auto") else int(raw["grid"])
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    if grid is not None and grid < 3:
        raise ConfigError("grid must be at least 3")
    return StudyConfig(
        samples=_parse_samples(str(raw["sample"])),
        methods=_parse_methods(str(raw["method"])),
        r=r,
        terms=_parse_terms(str(raw["terms"])),
        grid=grid,
        out=Path(raw["out"]),
        formats=_parse_formats(str(raw["format"])),
    )


def thread_count() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


# -- computations ----------------------------------------------------------

def build_expansion(sample_id: int, method: str, r: int, M: int):
    case = get_sample(sample_id)
    if method == "composite":
        if case.dim == 1:
            return build_composite_1d(case.spec, case.kind, r, M)
        return build_composite_2d(case.spec, case.kind, r, M, M)
    return build_direct(case.spec, case.kind, r, M)


def compute_report(sample_id: int, method: str, r: int, M: int, grid_points: int) -> ErrorReport:
    case = get_sample(sample_id)
    grid = make_grid(case.domain, grid_points)
    ex = build_expansion(sample_id, method, r, M)
    return error_report(ex, case.spec, 2 * r, grid, sample=sample_id, method=method,
                        M=M, N=None if case.dim == 1 else M)


def run_jobs(cfg: StudyConfig, truncations) -> list[ErrorReport]:
    jobs = [(s, m, M) for s in cfg.samples for m in cfg.methods for M in truncations]

    def work(job):
        s, m, M = job
        return compute_report(s, m, cfg.r, M, cfg.grid_for(get_sample(s).dim))

    n = thread_count()
    if n == 1:
        return [work(j) for j in jobs]
    with ThreadPoolExecutor(n) as pool:
        return list(pool.map(work, jobs))


# -- output ----------------------------------------------------------------

def format_value(v: float) -> str:
    return DEGENERATE if math.isnan(v) else f"{v:.5e}"


def report_rows(rep: ErrorReport) -> list[tuple]:
    n = "" if rep.N is None else rep.N
    return [(rep.sample, rep.method, rep.M, n, name, subset, value)
            for name, subset, value in rep.records()]


def write_records(rows: list[tuple], out: Path, stem: str, formats) -> list[Path]:
    out.mkdir(parents=True, exist_ok=True)
    written = []
    if "csv" in formats:
        path = out / f"{stem}.csv"
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(CSV_COLUMNS)
            for row in rows:
                w.writerow(row[:-1] + (format_value(row[-1]),))
        written.append(path)
    if "json" in formats:
        path = out / f"{stem}.json"
        recs = [dict(zip(CSV_COLUMNS, row[:-1] + (None if math.isnan(row[-1]) else row[-1],)))
                for row in rows]
        path.write_text(json.dumps(recs, indent=1) + "\n")
        written.append(path)
    return written


def write_plot_data(reports: list[ErrorReport], out: Path) -> list[Path]:
    """One two-column file (truncation, value) per curve of order-p errors."""
    plot_dir = out / "plot"
    plot_dir.mkdir(parents=True, exist_ok=True)
    curves: dict[tuple, list] = {}
    for rep in reports:
        for p in range(rep.max_order + 1):
            for s in rep.subsets:
                curves.setdefault((rep.sample, rep.method, s, p), []).append((rep.M, rep.order_p(p, s)))
    written = []
    for (sample, method, subset, p), pts in curves.items():
        path = plot_dir / f"sample{sample}_{method}_{subset}_order{p}.dat"
        path.write_text("".join(f"{M} {format_value(v)}\n" for M, v in pts))
        written.append(path)
    return written


def _row_label(row, dim: int) -> str:
    pts = ", ".join(f"{'+' if sign > 0 else '-'}{_fmt_point(p)}" for p, sign in row.terms)
    k = row.order if dim == 1 else f"{row.order[0]},{row.order[1]}"
    return f"u^({k}) [{pts}]"


def _fmt_point(p) -> str:
    if np.ndim(p) == 0:
        return f"x={p:g}"
    return f"({p[0]:g},{p[1]:g})"


def _arr(a):
    return None if a is None else np.asarray(a).tolist()


def coefficient_dump(sample_id: int, method: str, r: int, M: int) -> dict:
    case = get_sample(sample_id)
    ex = build_expansion(sample_id, method, r, M)
    out = {"sample": sample_id, "method": method, "kind": case.kind.name, "r": r, "M": M,
           "N": None if case.dim == 1 else M}
    if method == "direct":
        out["series"] = {str(k): (_arr(s.stacked) if case.dim == 1 else _arr(s.coef))
                         for k, s in ex.series.items()}
        out["layout"] = "per derivative order; cosine block then sine block along each axis"
        return out
    if case.dim == 1:
        out["q1"] = _arr(ex.q1)
        out["q1_rows"] = [_row_label(row, 1) for row in boundary_rows_1d(case.kind, r, case.domain.a)]
        out["a1"] = _arr(ex.a1)
        out["q0"] = {"cos": _arr(ex.q0.cos), "sin": _arr(ex.q0.sin)}
        return out
    dom = case.domain
    out["q3"] = _arr(ex.q3)
    out["q3_rows"] = [_row_label(row, 2) for row in corner_rows(case.kind, r, dom.a, dom.b)]
    k1d, k2d = axis_kinds(case.kind)
    for name, table, kind1d, extent in (("q1", ex.q1, k1d, dom.a), ("q2", ex.q2, k2d, dom.b)):
        out[name] = {"cos": _arr(table.q_cos), "sin": _arr(table.q_sin),
                     "rows": [_row_label(row, 1) for row in boundary_rows_1d(kind1d, r, extent)],
                     "layout": "[constraint row][mode]"}
    out["q0"] = {"coef": _arr(ex.q0.coef),
                 "layout": "rows: x1 cosine block then sine block; columns: x2 likewise"}
    return out


# -- subcommands -----------------------------------------------------------

def cmd_approximate(cfg: StudyConfig) -> list[Path]:
    """Dump expansion coefficients with constraint-row labels."""
    cfg.out.mkdir(parents=True, exist_ok=True)
    written = []
    for s in cfg.samples:
        for m in cfg.methods:
            for M in cfg.terms:
                path = cfg.out / f"coefficients_sample{s}_{m}_M{M}.json"
                path.write_text(json.dumps(coefficient_dump(s, m, cfg.r, M), indent=1) + "\n")
                written.append(path)
    return written


def cmd_convergence(cfg: StudyConfig) -> list[Path]:
    """Error indexes for every truncation, plus plot data."""
    reports = run_jobs(cfg, cfg.terms)
    rows = [row for rep in reports for row in report_rows(rep)]
    return write_records(rows, cfg.out, "convergence", cfg.formats) + write_plot_data(reports, cfg.out)


def comparison_table(reports: list[ErrorReport]) -> str:
    """Side-by-side text table: one line per index, one column per method."""
    by_sample: dict = {}
    for rep in reports:
        by_sample.setdefault(rep.sample, []).append(rep)
    lines = []
    for sample, reps in by_sample.items():
        p_max = reps[0].max_order
        lines.append(f"sample {sample} (M = {reps[0].M})")
        lines.append(f"{'index':<24}" + "".join(f"{r.method:>14}" for r in reps))
        for s in reps[0].subsets:
            for label, fn in ((f"||e||^{p_max - 2}", lambda r, s=s: r.up_to_p(p_max - 2, s)),
                              (f"|e|^{p_max - 1}", lambda r, s=s: r.order_p(p_max - 1, s)),
                              (f"|e|^{p_max}", lambda r, s=s: r.order_p(p_max, s))):
                lines.append(f"{label + ' ' + s:<24}" + "".join(f"{format_value(fn(r)):>14}" for r in reps))
        lines.append("")
    return "\n".join(lines)


def cmd_compare(cfg: StudyConfig) -> list[Path]:
    """Composite vs direct error indexes at the largest truncation."""
    cfg = replace(cfg, methods=METHODS)
    reports = run_jobs(cfg, cfg.terms[-1:])
    rows = [row for rep in reports for row in report_rows(rep)]
    written = write_records(rows, cfg.out, "compare", cfg.formats)
    path = cfg.out / "compare.txt"
    path.write_text(comparison_table(reports))
    return written + [path]


COMMANDS = {"approximate": cmd_approximate, "convergence": cmd_convergence, "compare": cmd_compare}


def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--sample", default="all", help="sample id 1..8, comma list, or 'all'")
    common.add_argument("--method", default="composite", help="composite, direct or both")
    common.add_argument("--r", default=3, type=int, help="smoothness order (max derivative 2r)")
    common.add_argument("--terms", default=",".join(map(str, DEFAULT_TERMS)),
                        help="ascending comma list of truncations M (= N in 2D)")
    common.add_argument("--grid", default=None, type=int,
                        help=f"sampling points per axis (default {DEFAULT_GRID_1D} in 1D, {DEFAULT_GRID_2D} in 2D)")
    common.add_argument("--out", default="cfsm_out", help="output directory")
    common.add_argument("--format", default="csv", help="csv, json or both")
    common.add_argument("--config", default=None, help="key=value file overriding the flags")
    parser = argparse.ArgumentParser(prog="cfsm", description="Composite Fourier series approximation studies.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, fn in COMMANDS.items():
        sub.add_parser(name, parents=[common], help=(fn.__doc__ or name).strip().splitlines()[0])
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = build_config(args)
        for path in COMMANDS[args.command](cfg):
            print(path)
    except (ConfigError, UnknownSample) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    return 0
