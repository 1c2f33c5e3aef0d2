"""Command-line entry point: ``cactus-wiener --command <name> ...``.

Exit status is 0 on success, 1 when a verification finds a failure or an
unexpected discrepancy, and 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Sequence

from . import constructors as C
from .enumeration import DEFAULT_MAX_N, enumerate_cacti, max_n_cap
from .errors import CactusError, Disconnected, TooLarge
from .graph_core import Graph, cactus_cycle_count, emit_edge_list, emit_graph6, is_cactus, read_graph, require_connected
from .invariants import edge_wiener, wiener
from .suites import SuiteResult, run_suite
from .transforms import Rewrite
from .verify import CSV_COLUMNS, VerificationReport, csv_row, load_known, verify_cell, sweep_cells

COMMANDS = ("compute", "construct", "enumerate", "verify-bounds", "verify-lemmas", "report")
FORMATS = ("text", "csv", "json", "graph6")
DEFAULT_BOUNDS_MAX_N = 9

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    input_path: str | None = None
    n: int | None = None
    t: int | None = None
    family: str | None = None
    family_params: dict[str, str] = field(default_factory=dict)
    output_format: str = "text"
    seed: int = 0
    max_n: int | None = None
    out: str | None = None

    def require(self, *names: str) -> None:
        missing = [x for x in names if getattr(self, x) is None]
        if missing:
            raise UsageError(f"--command {self.command} needs " + ", ".join("--" + m.replace("_", "-") for m in missing))


def parse_params(text: str | None) -> dict[str, str]:
    """``"i=1,j=1,n=6"`` or ``"blocks=3:2:3"`` into a dict."""
    if not text:
        return {}
    out = {}
    for item in text.split(","):
        key, sep, value = item.partition("=")
        if not sep or not key.strip():
            raise UsageError(f"bad --params item {item!r}; expected key=value")
        out[key.strip()] = value.strip()
    return out


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cactus-wiener", description="Edge-Wiener index of cacti: compute, build, enumerate, verify.")
    p.add_argument("--command", required=True, choices=COMMANDS)
    p.add_argument("--input", help="graph file (graph6 or edge list), '-' for stdin; for report, a JSON report")
    p.add_argument("--n", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--family", help="path, cycle, star, bundle, triangle-chain, saw, clipped-cycle, chain")
    p.add_argument("--params", help="comma-separated key=value family parameters")
    p.add_argument("--format", default="text", choices=FORMATS)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-n", type=int, help=f"cap override (also CACTUS_MAX_N, default {DEFAULT_MAX_N})")
    p.add_argument("--out", help="output file; a directory for verify-bounds and verify-lemmas")
    return p


def config_from_args(argv: Sequence[str] | None) -> RunConfig:
    a = build_parser().parse_args(argv)
    return RunConfig(
        command=a.command,
        input_path=a.input,
        n=a.n,
        t=a.t,
        family=a.family,
        family_params=parse_params(a.params),
        output_format=a.format,
        seed=a.seed,
        max_n=a.max_n,
        out=a.out,
    )


# ------------------------------------------------------------ helpers


def _read_text(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _write(cfg: RunConfig, text: str, name: str | None = None) -> None:
    if cfg.out is None:
        sys.stdout.write(text)
        return
    target = Path(cfg.out)
    if name is not None:
        target.mkdir(parents=True, exist_ok=True)
        target = target / name
    target.write_text(text)


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _int(params: dict[str, str], key: str, default: int | None = None) -> int:
    if key not in params:
        if default is None:
            raise UsageError(f"missing family parameter {key}")
        return default
    try:
        return int(params[key])
    except ValueError:
        raise UsageError(f"parameter {key} must be an integer") from None


def _ints(params: dict[str, str], key: str) -> list[int] | None:
    if key not in params:
        return None
    try:
        return [int(x) for x in params[key].split(":")]
    except ValueError:
        raise UsageError(f"parameter {key} must be colon-separated integers") from None


def _cap(cfg: RunConfig) -> int:
    return max_n_cap() if cfg.max_n is None else cfg.max_n


def _emit_graph(cfg: RunConfig, g: Graph) -> None:
    fmt = cfg.output_format
    if fmt == "graph6":
        text = emit_graph6(g) + "\n"
    elif fmt == "json":
        text = _dumps({"n": g.n, "m": g.m, "edges": [list(e) for e in g.edges], "graph6": emit_graph6(g)})
    else:
        text = emit_edge_list(g)
    _write(cfg, text)


# ----------------------------------------------------------- commands


def cmd_compute(cfg: RunConfig) -> int:
    g = read_graph(_read_text(cfg.input_path))
    require_connected(g)
    t = cactus_cycle_count(g) if is_cactus(g) else None
    w, we = wiener(g), edge_wiener(g)
    if cfg.output_format == "json":
        _write(cfg, _dumps({"n": g.n, "m": g.m, "t": t, "cactus": t is not None, "W": w, "We": we}))
    elif cfg.output_format == "csv":
        _write(cfg, f"n,m,t,W,We\n{g.n},{g.m},{'' if t is None else t},{w},{we}\n")
    else:
        tpart = "not a cactus" if t is None else f"t={t}"
        _write(cfg, f"n={g.n} m={g.m} {tpart}\nW={w} We={we}\n")
    return OK


FAMILIES: dict[str, Callable[[RunConfig], Graph]] = {
    "path": lambda c: C.path(_int(c.family_params, "n", c.n)),
    "cycle": lambda c: C.cycle(_int(c.family_params, "n", c.n)),
    "star": lambda c: C.star(_int(c.family_params, "n", c.n)),
    "bundle": lambda c: C.bundle(_int(c.family_params, "n", c.n), _int(c.family_params, "t", c.t)),
    "triangle-chain": lambda c: C.triangle_chain(_int(c.family_params, "i"))[0],
    "saw": lambda c: C.saw(_int(c.family_params, "i"), _int(c.family_params, "j"), _int(c.family_params, "n", c.n)),
    "clipped-cycle": lambda c: C.clipped_cycle(_int(c.family_params, "l", c.n)),
    "chain": lambda c: C.chain_cactus(
        _ints(c.family_params, "blocks") or [], _ints(c.family_params, "exits")
    ),
}


def cmd_construct(cfg: RunConfig) -> int:
    cfg.require("family")
    if cfg.family not in FAMILIES:
        raise UsageError(f"unknown family {cfg.family!r}; choose from {', '.join(FAMILIES)}")
    if cfg.output_format == "csv":
        raise UsageError("construct emits text, json or graph6")
    if cfg.family == "chain" and "blocks" not in cfg.family_params:
        raise UsageError("chain needs blocks=g1:g2:...")
    _emit_graph(cfg, FAMILIES[cfg.family](cfg))
    return OK


def cmd_enumerate(cfg: RunConfig) -> int:
    cfg.require("n", "t")
    cell = enumerate_cacti((cfg.n, cfg.t), max_n=_cap(cfg))
    if cfg.output_format == "json":
        _write(cfg, _dumps({"n": cfg.n, "t": cfg.t, "count": cell.count, "graphs": [str(f) for f in cell.forms]}))
    else:
        _write(cfg, "".join(f"{f}\n" for f in cell.forms))
    print(f"count={cell.count}", file=sys.stderr)
    return OK


def bounds_csv(reports: Sequence[VerificationReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in reports:
        w.writerow(csv_row(r))
    return buf.getvalue()


def bounds_json(reports: Sequence[VerificationReport], max_n: int, seed: int) -> str:
    return _dumps({"max_n": max_n, "seed": seed, "cells": [r.to_json() for r in reports]})


def bounds_failed(reports: Sequence[VerificationReport]) -> bool:
    return any(r.extremal_status != "EXTREMAL_CONFIRMED" or r.new_discrepancies for r in reports)


def cmd_verify_bounds(cfg: RunConfig) -> int:
    max_n = DEFAULT_BOUNDS_MAX_N if cfg.max_n is None else cfg.max_n
    cap = max_n_cap()
    if max_n > cap:
        raise TooLarge(f"max_n={max_n} exceeds the cap {cap}")
    known = load_known()
    reports = [verify_cell(p, known) for p in sweep_cells(max_n)]
    csv_text, json_text = bounds_csv(reports), bounds_json(reports, max_n, cfg.seed)
    if cfg.out is not None:
        _write(cfg, csv_text, "bounds.csv")
        _write(cfg, json_text, "bounds.json")
    elif cfg.output_format == "csv":
        sys.stdout.write(csv_text)
    elif cfg.output_format == "json":
        sys.stdout.write(json_text)
    if cfg.out is not None or cfg.output_format == "text":
        sys.stdout.write(render_bounds_summary(json.loads(json_text)))
    return FAILED if bounds_failed(reports) else OK


LEMMA_COLUMNS = (
    "rewrite",
    "seed",
    "valid",
    "holds",
    "delta_checked",
    "delta_matches",
    "equality_checked",
    "equality_matches",
    "out_of_hypothesis",
    "out_of_hypothesis_holds",
    "passed",
)


def lemma_row(r: SuiteResult, seed: int) -> list[str]:
    return [
        r.rewrite.value,
        str(seed),
        *(str(getattr(r, c)) for c in LEMMA_COLUMNS[2:-1]),
        "true" if r.passed else "false",
    ]


def cmd_verify_lemmas(cfg: RunConfig) -> int:
    count = _int(cfg.family_params, "count", 100)
    results = [run_suite(rw, cfg.seed, count) for rw in Rewrite]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(LEMMA_COLUMNS)
    for r in results:
        w.writerow(lemma_row(r, cfg.seed))
    if cfg.out is not None:
        _write(cfg, buf.getvalue(), "lemmas.csv")
    if cfg.output_format == "csv" and cfg.out is None:
        sys.stdout.write(buf.getvalue())
    else:
        for r in results:
            print(f"{r.rewrite.value:24s} {r.holds}/{r.valid} {'PASS' if r.passed else 'FAIL'}")
    return OK if all(r.passed for r in results) else FAILED


def render_bounds_summary(data: dict) -> str:
    lines = [f"cells n<={data['max_n']}: {len(data['cells'])}"]
    for c in data["cells"]:
        codes = [d["code"] + ("" if d["known"] else "(NEW)") for d in c["discrepancies"]]
        lines.append(
            f"n={c['n']:<2d} t={c['t']:<2d} min={c['oracle_min']:<4d} max={c['oracle_max']:<4d} "
            f"{c['extremal_status']} {c['formula_status']}" + (" " + " ".join(codes) if codes else "")
        )
    new = sum(1 for c in data["cells"] for d in c["discrepancies"] if not d["known"])
    lines.append(f"new discrepancies: {new}")
    return "\n".join(lines) + "\n"


def cmd_report(cfg: RunConfig) -> int:
    cfg.require("input_path")
    try:
        data = json.loads(_read_text(cfg.input_path))
        text = render_bounds_summary(data)
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise UsageError(f"not a verify-bounds JSON report: {exc}") from None
    _write(cfg, text)
    return OK


HANDLERS = {
    "compute": cmd_compute,
    "construct": cmd_construct,
    "enumerate": cmd_enumerate,
    "verify-bounds": cmd_verify_bounds,
    "verify-lemmas": cmd_verify_lemmas,
    "report": cmd_report,
}


def run(cfg: RunConfig) -> int:
    try:
        return HANDLERS[cfg.command](cfg)
    except Disconnected:
        print("error: graph is disconnected", file=sys.stderr)
    except (CactusError, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
    return USAGE


def main(argv: Sequence[str] | None = None) -> int:
    try:
        cfg = config_from_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
