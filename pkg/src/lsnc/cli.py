"""Command-line front end.

Exit codes: 0 success, 1 verification failed / infeasible, 2 usage error,
3 search budget exhausted.  All output is deterministic: identical
invocations produce byte-identical streams and files.
"""

from __future__ import annotations

import argparse
import cmath
import json
import random
import sys
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Sequence

from .constraint import ConstraintPartition, build_constraints, constrained_pls
from .coloring import exact_chromatic
from .errors import (
    AmbiguousGroupingError,
    CertificateMismatchError,
    CompletionError,
    PatternMismatchError,
    SearchBudgetExceeded,
)
from .fade_state import (
    enumerate_singular_fade_states,
    psk_representative,
    psk_representatives,
    psk_singular_fade_states,
    effective_constellation,
)
from .gridio import dumps_grid, grid_to_obj, loads_grid
from .latin import (
    Grid,
    default_budget,
    from_coloring,
    generic_complete,
    verify_latin,
    verify_removes,
)
from .psk_construct import classify, removal_square
from .signal_set import SignalSet, from_spec
from .srg import build_srg, qam_clique_certificate, row_clique, to_dot, vital_subgraph

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


@dataclass(frozen=True)
class RunReport:
    """One sweep row: what was built for one fade state and how it checked out."""

    k: int
    l: int
    case: str
    method: str
    symbols: int
    chi_lower: int
    chi_upper: int
    verified: bool
    wall_ms: float | None = None

    def to_obj(self) -> dict[str, Any]:
        return {
            "k": self.k,
            "l": self.l,
            "case": self.case,
            "method": self.method,
            "symbols": self.symbols,
            "chi_lower": self.chi_lower,
            "chi_upper": self.chi_upper,
            "verified": self.verified,
            "wall_ms": self.wall_ms,
        }


def _fmt_num(x: float) -> str:
    """Render 0.0 as 0 and keep full precision otherwise."""
    if x == int(x):
        return str(int(x))
    return repr(x)


def render_grid(grid: Grid) -> str:
    """ASCII boxed table in the style of the printed figures."""
    w = max(len(str(s)) for row in grid.rows for s in row)
    sep = "+" + ("-" * (w + 2) + "+") * grid.m
    lines = [sep]
    for row in grid.rows:
        cells = " | ".join(str(s).rjust(w) if s else " " * w for s in row)
        lines.append(f"| {cells} |")
        lines.append(sep)
    return "\n".join(lines)


def parse_fade(text: str, signal: SignalSet | None) -> complex:
    """Parse --fade: a+bj, polar:r,theta, or psk:k,l (PSK signal required)."""
    if text.startswith("psk:"):
        if signal is None or signal.kind != "psk":
            raise ValueError("psk:k,l fade states need --signal psk:M")
        parts = text[len("psk:"):].split(",")
        if len(parts) != 2:
            raise ValueError(f"expected psk:k,l, got {text!r}")
        k, l = (int(p) for p in parts)
        return psk_representative(signal.size, k, l).value
    if text.startswith("polar:"):
        parts = text[len("polar:"):].split(",")
        if len(parts) != 2:
            raise ValueError(f"expected polar:r,theta, got {text!r}")
        r, theta = (float(p) for p in parts)
        return r * cmath.exp(1j * theta)
    return complex(text.replace(" ", ""))


def _graph_to_obj(graph) -> dict[str, Any]:
    return {
        "n": graph.n,
        "vertex_blocks": [b + 1 for b in graph.vertex_block],
        "edges": [[u + 1, v + 1] for (u, v) in graph.edges()],
    }


def _dump_json(obj: Any) -> str:
    if isinstance(obj, list):  # one record per line
        body = ",\n ".join(json.dumps(r, sort_keys=True, separators=(",", ":")) for r in obj)
        return "[\n " + body + "\n]\n" if obj else "[]\n"
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def cmd_fade_states(args: argparse.Namespace) -> int:
    signal = from_spec(args.signal)
    if signal.kind == "psk":
        states = psk_singular_fade_states(signal.size)
    else:
        states = enumerate_singular_fade_states(signal)
    records = [
        {
            "re": fs.value.real,
            "im": fs.value.imag,
            "k": fs.k,
            "l": fs.l,
            "radius": fs.radius,
        }
        for fs in states
    ]
    if args.json:
        Path(args.json).write_text(_dump_json(records))
        print(f"{len(records)} singular fade states -> {args.json}")
    else:
        print(f"{len(records)} singular fade states")
        for r in records:
            kl = f" k={r['k']} l={r['l']}" if r["k"] is not None else ""
            print(f"  {_fmt_num(r['re'])}{'+' if r['im'] >= 0 else ''}{_fmt_num(r['im'])}j"
                  f"  radius={_fmt_num(r['radius'])}{kl}")
    return EXIT_OK


def cmd_constraints(args: argparse.Namespace) -> int:
    signal = from_spec(args.signal)
    fade = parse_fade(args.fade, signal)
    part = build_constraints(signal, fade)
    if args.json:
        print(_dump_json({"blocks": [[[r, c] for (r, c) in blk] for blk in part.blocks]}), end="")
    else:
        print(render_grid(constrained_pls(part)))
        print(f"{len(part.blocks)} blocks, {len(part.multi_indices)} with two or more cells")
    return EXIT_OK


def cmd_graph(args: argparse.Namespace) -> int:
    signal = from_spec(args.signal)
    fade = parse_fade(args.fade, signal)
    part = build_constraints(signal, fade)
    graph = build_srg(part)
    if args.vital:
        graph = vital_subgraph(graph, part)
    if args.dot:
        Path(args.dot).write_text(to_dot(graph))
    if args.json:
        Path(args.json).write_text(_dump_json(_graph_to_obj(graph)))
    print(f"vertices={graph.n} edges={graph.edge_count}")
    return EXIT_OK


def cmd_chromatic(args: argparse.Namespace) -> int:
    signal = from_spec(args.signal)
    fade = parse_fade(args.fade, signal)
    part = build_constraints(signal, fade)
    graph = build_srg(part)
    if args.vital_only:
        graph = vital_subgraph(graph, part)
    budget = args.budget if args.budget is not None else default_budget()
    result = exact_chromatic(graph, node_budget=budget)
    if not result.optimal:
        print(f"budget exhausted; best upper bound {result.chi}", file=sys.stderr)
        return EXIT_BUDGET
    print(f"chi={result.chi}")
    print(json.dumps({"colors": list(result.coloring.colors)}, separators=(",", ":")))
    return EXIT_OK


def cmd_latin(args: argparse.Namespace) -> int:
    signal = from_spec(args.signal)
    fade = parse_fade(args.fade, signal)
    part = build_constraints(signal, fade)
    graph = build_srg(part)
    budget = args.budget if args.budget is not None else default_budget()
    result = exact_chromatic(graph, node_budget=budget)
    if not result.optimal:
        print(f"budget exhausted; best upper bound {result.chi}", file=sys.stderr)
        return EXIT_BUDGET
    grid = from_coloring(part, result.coloring)
    if not (verify_latin(grid) and verify_removes(grid, part)):
        print("internal check failed: emitted square does not verify", file=sys.stderr)
        return EXIT_FAILED
    if args.json:
        Path(args.json).write_text(dumps_grid(grid))
    else:
        print(render_grid(grid))
    print(f"symbols={grid.symbol_count} chi={result.chi}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    signal = from_spec(args.signal)
    fade = parse_fade(args.fade, signal)
    try:
        grid = loads_grid(Path(args.latin).read_text())
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"cannot load grid: {exc}", file=sys.stderr)
        return EXIT_USAGE
    part = build_constraints(signal, fade)
    complete = grid.is_complete()
    latin = verify_latin(grid)
    removes = verify_removes(grid, part)
    print(f"latin={'ok' if latin else 'FAIL'} removes={'ok' if removes else 'FAIL'} "
          f"complete={'yes' if complete else 'no'} symbols={grid.symbol_count}")
    ok = latin and removes and (complete or args.allow_partial)
    return EXIT_OK if ok else EXIT_FAILED


def cmd_complete(args: argparse.Namespace) -> int:
    try:
        grid = loads_grid(Path(args.partial).read_text())
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"cannot load grid: {exc}", file=sys.stderr)
        return EXIT_USAGE
    budget = args.budget if args.budget is not None else default_budget()
    try:
        done = generic_complete(grid, args.symbols, node_budget=budget)
    except SearchBudgetExceeded:
        print("budget exhausted before the search finished", file=sys.stderr)
        return EXIT_BUDGET
    if done is None:
        print(f"no completion with {args.symbols} symbols exists", file=sys.stderr)
        return EXIT_FAILED
    if args.json:
        Path(args.json).write_text(dumps_grid(done))
    else:
        print(render_grid(done))
    print(f"symbols={done.symbol_count}")
    return EXIT_OK


def cmd_psk_sweep(args: argparse.Namespace) -> int:
    m = args.m
    signal = from_spec(f"psk:{m}")
    out_dir = Path(args.out) if args.out else None
    if out_dir:
        out_dir.mkdir(parents=True, exist_ok=True)
    reports: list[RunReport] = []
    rows = []
    for fs in psk_representatives(m):
        t0 = time.perf_counter()
        case = classify(m, fs.k, fs.l)
        grid = removal_square(m, fs.k, fs.l)
        part = build_constraints(signal, fs.value)
        graph = build_srg(part)
        lower = len(row_clique(graph, part))
        verified = (
            grid.is_complete()
            and verify_latin(grid)
            and verify_removes(grid, part)
            and grid.symbol_count == m
        )
        wall = (time.perf_counter() - t0) * 1000.0
        rep = RunReport(
            k=fs.k, l=fs.l, case=case.tag, method="closed-form",
            symbols=grid.symbol_count, chi_lower=lower, chi_upper=grid.symbol_count,
            verified=verified, wall_ms=round(wall, 3) if args.timing else None,
        )
        reports.append(rep)
        rows.append((fs, grid, rep))
    header = f"{'k':>3} {'l':>3}  {'case':<10} {'symbols':>7}  {'chi':>5}  verified"
    if args.timing:
        header += "  wall_ms"
    print(header)
    for fs, grid, rep in rows:
        line = (f"{rep.k:>3} {rep.l:>3}  {rep.case:<10} {rep.symbols:>7}  "
                f"{rep.chi_lower:>2}={rep.chi_upper:<2}  {'yes' if rep.verified else 'NO'}")
        if args.timing:
            line += f"  {rep.wall_ms}"
        print(line)
    print(f"{len(reports)} representatives, "
          f"{sum(1 for r in reports if r.verified)} verified")
    if out_dir:
        for fs, grid, rep in rows:
            (out_dir / f"rep_k{rep.k}_l{rep.l}.json").write_text(dumps_grid(grid))
        (out_dir / "summary.json").write_text(
            _dump_json([rep.to_obj() for rep in reports])
        )
    return EXIT_OK if all(r.verified for r in reports) else EXIT_FAILED


def cmd_clique(args: argparse.Namespace) -> int:
    signal = from_spec(args.signal)
    if signal.kind != "qam":
        print("clique certificates are defined for qam:M signals", file=sys.stderr)
        return EXIT_USAGE
    fade = parse_fade(args.fade, signal)
    try:
        vertices = qam_clique_certificate(signal.size, fade)
    except (ValueError, CertificateMismatchError) as exc:
        print(f"certificate failed: {exc}", file=sys.stderr)
        return EXIT_FAILED
    if args.json:
        print(_dump_json({"size": len(vertices), "blocks": [v + 1 for v in vertices]}), end="")
    else:
        print(f"clique size={len(vertices)}")
        print("blocks: " + " ".join(str(v + 1) for v in vertices))
    return EXIT_OK


def cmd_mindist(args: argparse.Namespace) -> int:
    signal = from_spec(args.signal)
    fade = parse_fade(args.fade, signal)
    points, dmin = effective_constellation(signal, fade)
    print(f"points={len(points)} dmin={_fmt_num(dmin)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="lsnc",
        description="Synthesize and verify Latin-square relay maps that "
                    "remove singular fade states.",
    )
    p.add_argument("--seed", type=int, default=None,
                   help="seed for randomized helpers (fixed output regardless)")
    sub = p.add_subparsers(dest="command", required=True)

    def add_signal_fade(sp, fade=True):
        sp.add_argument("--signal", required=True,
                        help="psk:M | qam:M | pam:M | custom:@points.json")
        if fade:
            sp.add_argument("--fade", required=True,
                            help="a+bj | polar:r,theta | psk:k,l")

    sp = sub.add_parser("fade-states", help="enumerate singular fade states")
    sp.add_argument("--signal", required=True)
    sp.add_argument("--json", metavar="PATH", help="write records to a JSON file")
    sp.set_defaults(func=cmd_fade_states)

    sp = sub.add_parser("constraints", help="show the constraint partition")
    add_signal_fade(sp)
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--ascii", action="store_true", help="boxed table (default)")
    mode.add_argument("--json", action="store_true", help="JSON blocks to stdout")
    sp.set_defaults(func=cmd_constraints)

    sp = sub.add_parser("graph", help="export the singularity removal graph")
    add_signal_fade(sp)
    sp.add_argument("--vital", action="store_true", help="restrict to multi-cell blocks")
    sp.add_argument("--dot", metavar="PATH", help="write a DOT file")
    sp.add_argument("--json", metavar="PATH", help="write a JSON file")
    sp.set_defaults(func=cmd_graph)

    sp = sub.add_parser("chromatic", help="exact chromatic number of the graph")
    add_signal_fade(sp)
    sp.add_argument("--vital-only", action="store_true")
    sp.add_argument("--budget", type=int, default=None, help="search node budget")
    sp.set_defaults(func=cmd_chromatic)

    sp = sub.add_parser("latin", help="emit a minimum-symbol removing Latin square")
    add_signal_fade(sp)
    sp.add_argument("--budget", type=int, default=None)
    sp.add_argument("--json", metavar="PATH", help="write the grid JSON here")
    sp.set_defaults(func=cmd_latin)

    sp = sub.add_parser("verify", help="verify a Latin square against a fade state")
    sp.add_argument("--latin", required=True, metavar="GRID.json")
    add_signal_fade(sp)
    sp.add_argument("--allow-partial", action="store_true",
                    help="accept incomplete grids")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("complete", help="complete a partial Latin square")
    sp.add_argument("--partial", required=True, metavar="GRID.json")
    sp.add_argument("--symbols", required=True, type=int)
    sp.add_argument("--budget", type=int, default=None)
    sp.add_argument("--json", metavar="PATH", help="write the grid JSON here")
    sp.set_defaults(func=cmd_complete)

    sp = sub.add_parser("psk-sweep", help="build squares for all PSK representatives")
    sp.add_argument("--m", required=True, type=int)
    sp.add_argument("--out", metavar="DIR", help="write per-state grids + summary.json")
    sp.add_argument("--timing", action="store_true",
                    help="include wall times (breaks byte determinism)")
    sp.set_defaults(func=cmd_psk_sweep)

    sp = sub.add_parser("clique", help="certified clique for square QAM states")
    add_signal_fade(sp)
    sp.add_argument("--json", action="store_true", help="JSON to stdout")
    sp.set_defaults(func=cmd_clique)

    sp = sub.add_parser("mindist", help="effective constellation size and min distance")
    add_signal_fade(sp)
    sp.set_defaults(func=cmd_mindist)
    return p


def _absorb_fade_value(argv: list[str]) -> list[str]:
    """Fold `--fade -0.5-0.5j` into `--fade=-0.5-0.5j`.

    argparse otherwise reads a leading-minus fade value as an option flag.
    """
    out: list[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok == "--fade" and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"--fade={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_absorb_fade_value(list(argv if argv is not None else sys.argv[1:])))
    if args.seed is not None:
        random.seed(args.seed)
    try:
        return args.func(args)
    except SearchBudgetExceeded as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (CompletionError, CertificateMismatchError, PatternMismatchError) as exc:
        print(f"failed: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except (ValueError, AmbiguousGroupingError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
