"""Command line: ``alphaspec spectrum`` and ``alphaspec verify``.

Exit codes: 0 success, 1 bound violation, 2 bad input or configuration,
3 disconnected graph.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bounds import BOUND_IDS
from .formats import ParseError, parse_graphs
from .graphs import FAMILIES, DisconnectedGraphError, GraphError, all_pairs_distances, generate_family
from .spectra import alpha_spectrum, graph_invariants
from .sweep import (DEFAULT_ALPHA_GRID, ConfigError, CorpusSpec, SweepConfig, default_tolerance,
                    run_sweep, serialize)

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_DISCONNECTED = 0, 1, 2, 3


class UsageError(ValueError):
    pass


def parse_range(text: str) -> tuple[int, int]:
    """``'7'`` -> (7, 7); ``'3..30'`` or ``'3:30'`` -> (3, 30)."""
    for sep in ("..", ":"):
        if sep in text:
            lo, hi = text.split(sep, 1)
            return int(lo), int(hi)
    v = int(text)
    return v, v


def parse_grid(text: str) -> tuple[float, ...]:
    return tuple(float(x) for x in text.split(",") if x.strip())


def _read_input(source: str) -> bytes:
    if source == "-":
        return sys.stdin.buffer.read()
    return Path(source).read_bytes()


def _format_value(x: float) -> str:
    return f"{x:.10g}"


def cmd_spectrum(args) -> int:
    if args.family:
        n_lo, n_hi = parse_range(args.n)
        graphs = [generate_family(args.family, n) for n in range(n_lo, n_hi + 1)]
    elif args.input:
        graphs = parse_graphs(_read_input(args.input), args.format)
    else:
        raise UsageError("spectrum needs --input or --family/--n")

    payload = []
    for g in graphs:
        d = all_pairs_distances(g)
        s = alpha_spectrum(d, args.alpha)
        inv = graph_invariants(s)
        entry = {
            "n": g.n, "m": g.m, "wiener": d.wiener, "s_sum": d.s_sum,
            "tr_min": d.min_tr, "tr_max": d.max_tr, "alpha": s.alpha,
            "sigma": s.values.tolist(), "energy": inv.energy, "estrada": inv.estrada,
        }
        payload.append(entry)
        if not args.json:
            print(f"n = {g.n}  m = {g.m}  W = {d.wiener}  S = {d.s_sum}  Tr in [{d.min_tr}, {d.max_tr}]")
            print(f"alpha = {s.alpha:g}")
            print("sigma = " + " ".join(_format_value(x) for x in s.values))
            print(f"energy = {_format_value(inv.energy)}")
            print(f"estrada = {_format_value(inv.estrada)}")
    if args.json:
        print(json.dumps(payload if len(payload) > 1 else payload[0], sort_keys=True))
    return EXIT_OK


def build_config(args) -> SweepConfig:
    grid = parse_grid(args.alpha_grid) if args.alpha_grid is not None else DEFAULT_ALPHA_GRID
    bounds = "all" if args.bounds in (None, "all") else tuple(b.strip() for b in args.bounds.split(",") if b.strip())
    if args.input:
        corpus = CorpusSpec(kind="files", paths=tuple(args.input), fmt=args.format)
    elif args.family:
        corpus = CorpusSpec(kind="family", family=args.family, n_range=parse_range(args.n or "3..30"))
    else:
        extra = parse_range(args.extra) if args.extra else None
        corpus = CorpusSpec(kind="random", n_range=parse_range(args.n or "2..12"), extra_range=extra,
                            seeds=args.seeds, seed=args.seed)
    tol = args.tol if args.tol is not None else default_tolerance()
    return SweepConfig(alpha_grid=grid, tolerance=tol, corpus=corpus, bounds=bounds,
                       closed_form_checks=not args.no_closed_forms, jobs=args.jobs).validate()


def cmd_verify(args) -> int:
    config = build_config(args)
    report = run_sweep(config)
    text = serialize(report, args.report)
    if args.out and args.out != "-":
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    if report.violations:
        for v in report.summary["violation_list"]:
            print(f"violation: {v['graph_id']} alpha={v['alpha']} {v['bound_id']} ({v['side']}) "
                  f"slack={v['slack']:.3e}", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="alphaspec", description="alpha-distance spectra and bound checks")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", help="print the alpha-distance spectrum, energy and Estrada index")
    sp.add_argument("--input", help="graph file (graph6 or edge list), '-' for stdin")
    sp.add_argument("--format", choices=("graph6", "edgelist"), help="input format (default: detect)")
    sp.add_argument("--family", choices=FAMILIES)
    sp.add_argument("--n", default="4", help="vertex count or range for --family")
    sp.add_argument("--alpha", type=float, required=True)
    sp.add_argument("--json", action="store_true", help="print JSON instead of text")
    sp.set_defaults(func=cmd_spectrum)

    vp = sub.add_parser("verify", help="check every bound over a corpus and an alpha grid")
    vp.add_argument("--input", action="append", help="graph file; repeatable")
    vp.add_argument("--format", choices=("graph6", "edgelist"))
    vp.add_argument("--family", choices=FAMILIES)
    vp.add_argument("--n", help="vertex range, e.g. 3..30 (family) or 2..12 (random)")
    vp.add_argument("--extra", help="extra-edge range for the random corpus, e.g. 0..5")
    vp.add_argument("--seeds", type=int, default=200, help="number of random graphs")
    vp.add_argument("--seed", type=int, default=0, help="first seed")
    vp.add_argument("--alpha-grid", help="comma-separated alphas (default 0,0.1,...,0.9,0.99)")
    vp.add_argument("--bounds", help=f"comma-separated ids or 'all'; ids: {', '.join(BOUND_IDS)}")
    vp.add_argument("--tol", type=float, help="inequality tolerance (default 1e-8 or $ALPHASPEC_TOL)")
    vp.add_argument("--report", choices=("json", "csv", "text"), default="text")
    vp.add_argument("--out", help="output path (default stdout)")
    vp.add_argument("--jobs", type=int, default=1)
    vp.add_argument("--no-closed-forms", action="store_true", help="skip star/complete closed-form checks")
    vp.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DisconnectedGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISCONNECTED
    except (ParseError, ConfigError, GraphError, UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
