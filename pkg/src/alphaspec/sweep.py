"""Corpus x alpha-grid verification sweeps and report serialization."""
from __future__ import annotations

import csv
import io
import json
import math
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from .bounds import BOUND_IDS, DEFAULT_BOUND_TOL, BoundResult, evaluate_all
from .closed_forms import complete_spectrum, star_energy, star_spectrum
from .formats import encode_graph6, read_graphs
from .graphs import FAMILIES, Graph, all_pairs_distances, generate_family, generate_random_connected
from .spectra import alpha_spectrum, graph_invariants

DEFAULT_ALPHA_GRID = (0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99)
TOL_ENV = "ALPHASPEC_TOL"
SCHEMA_VERSION = 1


class ConfigError(ValueError):
    pass


def default_tolerance() -> float:
    raw = os.environ.get(TOL_ENV)
    if raw is None:
        return DEFAULT_BOUND_TOL
    try:
        tol = float(raw)
    except ValueError:
        raise ConfigError(f"{TOL_ENV}={raw!r} is not a number") from None
    if not tol > 0:
        raise ConfigError(f"{TOL_ENV} must be positive, got {tol}")
    return tol


@dataclass(frozen=True)
class CorpusSpec:
    """Where the graphs come from.

    ``kind`` is ``files``, ``family`` or ``random``. Ranges are inclusive.
    For ``random``, ``extra_range=None`` means "anything from a tree up to
    the complete graph"; seeds run ``seed, seed + 1, ..., seed + seeds - 1``.
    """

    kind: str = "random"
    paths: tuple[str, ...] = ()
    fmt: str | None = None
    family: str | None = None
    n_range: tuple[int, int] = (2, 12)
    extra_range: tuple[int, int] | None = None
    seeds: int = 200
    seed: int = 0


@dataclass(frozen=True)
class SweepConfig:
    alpha_grid: tuple[float, ...] = DEFAULT_ALPHA_GRID
    tolerance: float = DEFAULT_BOUND_TOL
    corpus: CorpusSpec = field(default_factory=CorpusSpec)
    bounds: tuple[str, ...] | str = "all"
    closed_form_checks: bool = True
    jobs: int = 1

    def validate(self) -> "SweepConfig":
        if not self.alpha_grid:
            raise ConfigError("alpha grid is empty")
        for a in self.alpha_grid:
            if not 0.0 <= a <= 1.0:
                raise ConfigError(f"alpha {a} outside [0, 1]")
        if not self.tolerance > 0:
            raise ConfigError(f"tolerance must be positive, got {self.tolerance}")
        if self.bounds != "all":
            unknown = sorted(set(self.bounds) - set(BOUND_IDS))
            if unknown:
                raise ConfigError(f"unknown bound ids {unknown}; known: {', '.join(BOUND_IDS)}")
        c = self.corpus
        if c.kind not in ("files", "family", "random"):
            raise ConfigError(f"unknown corpus kind {c.kind!r}")
        lo, hi = c.n_range
        if lo < 1 or hi < lo:
            raise ConfigError(f"bad vertex range {c.n_range}")
        if c.kind == "family" and c.family not in FAMILIES:
            raise ConfigError(f"unknown family {c.family!r}")
        if c.kind == "files" and not c.paths:
            raise ConfigError("file corpus needs at least one path")
        if c.kind == "random" and c.seeds < 0:
            raise ConfigError("seed count must be >= 0")
        if self.jobs < 1:
            raise ConfigError("jobs must be >= 1")
        return self


def build_corpus(spec: CorpusSpec) -> list[tuple[str, Graph]]:
    """``(graph_id, graph)`` pairs; ids sort in generation order."""
    if spec.kind == "files":
        out = []
        for path in spec.paths:
            for i, g in enumerate(read_graphs(path, spec.fmt)):
                out.append((f"{path}#{i:05d}", g))
        return out
    lo, hi = spec.n_range
    if spec.kind == "family":
        return [(f"{spec.family}-{n:05d}", generate_family(spec.family, n)) for n in range(lo, hi + 1)]
    out = []
    for seed in range(spec.seed, spec.seed + spec.seeds):
        rng = random.Random(seed)
        n = rng.randint(lo, hi)
        max_extra = n * (n - 1) // 2 - (n - 1)
        e_lo, e_hi = spec.extra_range if spec.extra_range is not None else (0, max_extra)
        extra = rng.randint(min(e_lo, max_extra), min(e_hi, max_extra))
        out.append((f"random-{seed:06d}", generate_random_connected(n, extra, seed)))
    return out


@dataclass
class AlphaRecord:
    alpha: float
    sigma_1: float
    sigma_n: float
    energy: float
    estrada: float
    results: list[BoundResult]
    closed_form_deviation: float | None = None
    energy_deviation: float | None = None

    def to_dict(self) -> dict:
        d = {k: v for k, v in asdict(self).items() if k != "results"}
        d["results"] = [r.to_dict() for r in self.results]
        return d


@dataclass
class GraphRecord:
    graph_id: str
    graph6: str
    n: int
    m: int
    wiener: int
    s_sum: int
    tr_min: int
    tr_max: int
    transmission_regular: bool
    alphas: list[AlphaRecord]

    def to_dict(self) -> dict:
        d = {k: v for k, v in asdict(self).items() if k != "alphas"}
        d["alphas"] = [a.to_dict() for a in self.alphas]
        return d


def _closed_form_values(g: Graph, alpha: float):
    if g.n >= 2 and g.is_complete():
        return complete_spectrum(g.n, alpha).expanded(), None
    if g.is_star():
        return star_spectrum(g.n, alpha).expanded(), star_energy(g.n, alpha)
    return None, None


def evaluate_graph(graph_id: str, g: Graph, config: SweepConfig) -> GraphRecord:
    d = all_pairs_distances(g)
    selection = None if config.bounds == "all" else config.bounds
    alphas = []
    for a in config.alpha_grid:
        s = alpha_spectrum(d, a)
        inv = graph_invariants(s)
        rec = AlphaRecord(a, s.radius, s.smallest, inv.energy, inv.estrada,
                          evaluate_all(d, s, inv, config.tolerance, selection))
        if config.closed_form_checks:
            values, energy = _closed_form_values(g, a)
            if values is not None:
                rec.closed_form_deviation = float(np.max(np.abs(values - s.values)))
            if energy is not None:
                rec.energy_deviation = abs(energy - inv.energy)
        alphas.append(rec)
    return GraphRecord(graph_id, encode_graph6(g).decode(), g.n, g.m, d.wiener, d.s_sum,
                       d.min_tr, d.max_tr, d.is_transmission_regular(), alphas)


def _evaluate_item(item):
    return evaluate_graph(*item)


@dataclass
class Report:
    config: dict
    records: list[GraphRecord]
    summary: dict

    @property
    def violations(self) -> int:
        return self.summary["violations"]

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "config": self.config,
            "records": [r.to_dict() for r in self.records],
            "summary": self.summary,
        }


def summarize(records: list[GraphRecord], tol: float) -> dict:
    holds = violations = inapplicable = 0
    min_slack = math.inf
    offending = []
    quad_printed = spread_printed = 0
    eq_mismatch: dict[str, int] = {}
    cf_dev = en_dev = None
    for rec in records:
        for ar in rec.alphas:
            if ar.closed_form_deviation is not None:
                cf_dev = max(cf_dev or 0.0, ar.closed_form_deviation)
            if ar.energy_deviation is not None:
                en_dev = max(en_dev or 0.0, ar.energy_deviation)
            for r in ar.results:
                if not r.applicable:
                    inapplicable += 1
                    continue
                min_slack = min(min_slack, r.slack)
                if r.holds:
                    holds += 1
                else:
                    violations += 1
                    offending.append({"graph_id": rec.graph_id, "alpha": ar.alpha,
                                      "bound_id": r.bound_id, "side": r.side, "slack": r.slack})
                if r.equality_structural is not None and r.equality_numeric != r.equality_structural:
                    eq_mismatch[r.bound_id] = eq_mismatch.get(r.bound_id, 0) + 1
                if r.bound_id == "radius_quadratic_transmission" and r.details.get("printed_differs"):
                    quad_printed += 1
                if r.bound_id == "spread_quotient":
                    diff = r.details.get("printed_minus_quotient", 0.0)
                    if not abs(diff) <= tol * (1.0 + abs(r.bound_value)):
                        spread_printed += 1
    return {
        "graphs": len(records),
        "holds": holds,
        "violations": violations,
        "inapplicable": inapplicable,
        "min_slack": None if math.isinf(min_slack) else min_slack,
        "max_negative_slack": min(min_slack, 0.0) if not math.isinf(min_slack) else 0.0,
        "violation_list": offending,
        "equality_mismatches": dict(sorted(eq_mismatch.items())),
        "printed_formula_discrepancies": {
            "radius_quadratic_transmission": quad_printed,
            "spread_quotient": spread_printed,
        },
        "max_closed_form_deviation": cf_dev,
        "max_closed_form_energy_deviation": en_dev,
    }


def run_sweep(config: SweepConfig, corpus: list[tuple[str, Graph]] | None = None) -> Report:
    config.validate()
    if corpus is None:
        corpus = build_corpus(config.corpus)
    items = [(gid, g, config) for gid, g in corpus]
    if config.jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            records = list(pool.map(_evaluate_item, items, chunksize=max(1, len(items) // (4 * config.jobs))))
    else:
        records = [_evaluate_item(it) for it in items]
    records.sort(key=lambda r: r.graph_id)
    cfg = asdict(config)
    cfg.pop("jobs")
    return Report(cfg, records, summarize(records, config.tolerance))


# ------------------------------------------------------------ serialization

def _clean(obj):
    if isinstance(obj, dict):
        return {str(k): _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        if math.isnan(x):
            return None
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        return x
    return obj


def to_json(report: Report) -> str:
    return json.dumps(_clean(report.to_dict()), sort_keys=True, indent=1) + "\n"


CSV_FIELDS = ("graph_id", "n", "alpha", "bound_id", "side", "applicable", "holds", "bound_value",
              "actual_value", "slack", "equality_numeric", "equality_structural", "strict")


def to_csv(report: Report) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for rec in report.records:
        for ar in rec.alphas:
            for r in ar.results:
                w.writerow([rec.graph_id, rec.n, repr(ar.alpha), r.bound_id, r.side, r.applicable, r.holds,
                            repr(r.bound_value), repr(r.actual_value), repr(r.slack),
                            r.equality_numeric, r.equality_structural, r.strict])
    return buf.getvalue()


def to_text(report: Report) -> str:
    s = report.summary
    lines = [
        f"graphs: {s['graphs']}  alphas: {len(report.config['alpha_grid'])}",
        f"bound checks: {s['holds']} hold, {s['violations']} violated, {s['inapplicable']} not applicable",
        f"most negative slack: {s['max_negative_slack']:.3e}",
    ]
    if s["max_closed_form_deviation"] is not None:
        lines.append(f"max closed-form spectrum deviation: {s['max_closed_form_deviation']:.3e}")
    if s["max_closed_form_energy_deviation"] is not None:
        lines.append(f"max closed-form energy deviation: {s['max_closed_form_energy_deviation']:.3e}")
    pf = s["printed_formula_discrepancies"]
    lines.append(f"printed-formula discrepancies: quadratic radius {pf['radius_quadratic_transmission']}, "
                 f"spread {pf['spread_quotient']}")
    if s["equality_mismatches"]:
        lines.append("numeric equality without the structural condition (or vice versa):")
        lines += [f"  {k}: {v}" for k, v in s["equality_mismatches"].items()]
    for v in s["violation_list"]:
        lines.append(f"VIOLATION {v['graph_id']} alpha={v['alpha']} {v['bound_id']} ({v['side']}) "
                     f"slack={v['slack']:.3e}")
    return "\n".join(lines) + "\n"


def serialize(report: Report, fmt: str) -> str:
    if fmt == "json":
        return to_json(report)
    if fmt == "csv":
        return to_csv(report)
    if fmt == "text":
        return to_text(report)
    raise ValueError(f"unknown report format {fmt!r}")
