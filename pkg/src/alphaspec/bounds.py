"""Inequalities on the alpha-distance spectrum, evaluated as records.

Every evaluator returns :class:`BoundResult` objects; nothing here raises
on a violated inequality. Slack is signed so that positive means the
inequality is satisfied, and a result ``holds`` when
``slack >= -tol * (1 + |actual|)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np
from numpy.polynomial import Polynomial

from .graphs import DistanceData
from .linalg import eigenvalues_2x2, frobenius_norm, quotient_matrix
from .spectra import EXP_MAX, GraphInvariants, Spectrum, build_alpha_matrix

DEFAULT_BOUND_TOL = 1e-8

# id -> short description; order is the report order within one (graph, alpha)
BOUNDS = {
    "radius_avg_transmission": "spectral radius >= 2W/n, equality iff transmission regular",
    "radius_transmission_range": "min Tr <= spectral radius <= max Tr",
    "radius_quadratic_transmission": "spectral radius between the quadratic roots built from min/max Tr",
    "radius_frobenius": "spectral radius <= 2aW/n + sqrt((n-1)/n (|D_a|_F^2 - 4a^2W^2/n)), equality iff complete",
    "rowsum_poly_x": "min row sum of D_a <= p(radius) <= max row sum, p(x) = x",
    "rowsum_poly_x2": "row-sum bracket for p(x) = x^2",
    "rowsum_poly_shifted": "row-sum bracket for p(x) = x^2 - (1-a)(t-1)x",
    "rowsum_quadratic_chain": "row sums of the shifted quadratics against their transmission estimates",
    "weighted_transmission": "sum_v d(u,v) Tr(v) between the min/max transmission estimates",
    "energy_complete_lower": "energy >= 2(1-a)(n-1) on [1/2, 1), equality iff complete",
    "energy_centered_frobenius": "energy <= sqrt(n Z)",
    "energy_moment": "energy <= sqrt(n sum sigma^2 - 4a^2W^2)",
    "energy_half_radius": "energy < n * radius / 2 on [1/2, 1)",
    "frobenius_transmission": "|D_a|_F < sqrt(a^2 sum Tr^2 + (1-a)^2 (sum Tr)^2 / n)",
    "estrada_moment_upper": "Estrada <= n + 2aW - 1 - w + e^w",
    "estrada_amgm_lower": "Estrada >= sqrt(n + 4aW + n(n-1) e^(4aW/n))",
    "estrada_wiener_lower": "Estrada >= e^(2W/n) + n - 1 + 2aW - 2W/n",
    "estrada_regular_lower": "Estrada >= e^r + n - 1 + 2ar - r for transmission regular graphs",
    "estrada_energy_upper": "Estrada <= e^(2aW/n) (n - 1 - energy + e^energy)",
    "spread_quotient": "sigma_1 - sigma_n >= eigenvalue gap of the 2x2 vertex/rest quotient",
    "quotient_interlacing": "eigenvalues of a 2-block quotient interlace the spectrum",
}
BOUND_IDS = tuple(BOUNDS)


@dataclass
class BoundResult:
    bound_id: str
    side: str
    bound_value: float
    actual_value: float
    slack: float
    holds: bool | None
    applicable: bool = True
    equality_numeric: bool | None = None
    equality_structural: bool | None = None
    strict: bool = False
    details: dict = field(default_factory=dict)

    @property
    def violated(self) -> bool:
        return self.applicable and not self.holds

    def to_dict(self) -> dict:
        return {
            "bound_id": self.bound_id,
            "side": self.side,
            "bound_value": self.bound_value,
            "actual_value": self.actual_value,
            "slack": self.slack,
            "holds": self.holds,
            "applicable": self.applicable,
            "equality_numeric": self.equality_numeric,
            "equality_structural": self.equality_structural,
            "strict": self.strict,
            "details": self.details,
        }


def make_result(bound_id, side, bound, actual, tol=DEFAULT_BOUND_TOL, *,
                structural=None, strict=False, details=None) -> BoundResult:
    if side not in ("lower", "upper"):
        raise ValueError(f"side must be 'lower' or 'upper', got {side!r}")
    bound, actual = float(bound), float(actual)
    slack = actual - bound if side == "lower" else bound - actual
    scale = tol * (1.0 + abs(actual))
    details = dict(details or {})
    if math.isinf(bound):
        details["bound_overflow"] = True
    holds = bool(slack >= -scale) if not math.isnan(slack) else False
    equal = bool(abs(slack) < scale) if not math.isnan(slack) else False
    return BoundResult(bound_id, side, bound, actual, slack, holds, True, equal,
                       structural, strict, details)


def not_applicable(bound_id, side, reason: str) -> BoundResult:
    return BoundResult(bound_id, side, math.nan, math.nan, math.nan, None, False,
                       details={"reason": reason})


def in_half_open_upper(alpha: float) -> bool:
    return 0.5 <= alpha < 1.0


def _exp(x: float) -> float:
    return math.exp(x) if x <= EXP_MAX else math.inf


def _sqrt_or_nan(x: float) -> float:
    return math.sqrt(x) if x >= 0 else math.nan


def _rows_equal(rows: np.ndarray) -> bool:
    return bool(np.ptp(rows) <= 1e-9 * (1.0 + np.abs(rows).max()))


# ---------------------------------------------------------------- radius

def quadratic_root(b: float, c: float) -> float:
    """Larger root of ``x^2 - b x - c = 0``."""
    return (b + math.sqrt(b * b + 4.0 * c)) / 2.0


def quadratic_transmission_terms(d: DistanceData, alpha: float, tr: int) -> tuple[float, float]:
    """``(b, C)`` for the transmission value ``tr`` (use the min for the lower bound, max for the upper)."""
    b = (1.0 - alpha) * (tr - 1)
    c = alpha * tr * tr + 2.0 * (1.0 - alpha) * d.wiener - (1.0 - alpha) * (d.n - 1) * tr
    return b, c


def radius_bounds(d: DistanceData, s: Spectrum, tol: float = DEFAULT_BOUND_TOL) -> list[BoundResult]:
    a, n, W = s.alpha, d.n, d.wiener
    rho = s.radius
    regular = d.is_transmission_regular()
    out = [
        make_result("radius_avg_transmission", "lower", 2.0 * W / n, rho, tol, structural=regular),
        make_result("radius_transmission_range", "lower", d.min_tr, rho, tol, structural=regular),
        make_result("radius_transmission_range", "upper", d.max_tr, rho, tol, structural=regular),
    ]

    if in_half_open_upper(a):
        for side, tr in (("lower", d.min_tr), ("upper", d.max_tr)):
            b, c = quadratic_transmission_terms(d, a, tr)
            derived = quadratic_root(b, c)
            printed_radicand = b * b - 4.0 * c
            printed = (b + _sqrt_or_nan(printed_radicand)) / 2.0
            out.append(make_result(
                "radius_quadratic_transmission", side, derived, rho, tol,
                details={"b": b, "C": c, "printed_radicand": printed_radicand,
                         "printed_value": printed, "printed_differs": printed != derived},
            ))
    else:
        for side in ("lower", "upper"):
            out.append(not_applicable("radius_quadratic_transmission", side, "alpha outside [1/2, 1)"))

    bound = 2.0 * a * W / n + math.sqrt((n - 1) / n * centered_square_sum(d, a))
    out.append(make_result("radius_frobenius", "upper", bound, rho, tol, structural=_complete(d)))
    return out


def centered_square_sum(d: DistanceData, alpha: float) -> float:
    """``|D_a|_F^2 - 4 a^2 W^2 / n`` written as a sum of nonnegative terms.

    Equals ``a^2 (n sum Tr^2 - 4W^2) / n + 2 (1-a)^2 S``; the integer part is
    exact, so transmission-regular graphs give exactly zero in the first term.
    """
    spread = d.n * d.tr_sq_sum - 4 * d.wiener * d.wiener
    return alpha * alpha * spread / d.n + 2.0 * (1.0 - alpha) ** 2 * d.s_sum


def _complete(d: DistanceData) -> bool:
    return d.wiener == d.n * (d.n - 1) // 2


# ------------------------------------------------------ row sums / polynomials

def matrix_polynomial(p: Polynomial, m: np.ndarray) -> np.ndarray:
    """``p(M)`` by Horner's rule with explicit products."""
    coef = np.asarray(p.coef, dtype=float)
    eye = np.eye(m.shape[0])
    out = coef[-1] * eye
    for c in coef[-2::-1]:
        out = out @ m + c * eye
    return out


def poly_rowsum_bound(d: DistanceData, s: Spectrum, p: Polynomial, tol: float = DEFAULT_BOUND_TOL,
                      bound_id: str = "rowsum_poly") -> list[BoundResult]:
    """Bracket ``min R_i(p(D_a)) <= p(radius) <= max R_i(p(D_a))`` (two results)."""
    if p.degree() > 4:
        raise ValueError(f"polynomial degree must be <= 4, got {p.degree()}")
    if not in_half_open_upper(s.alpha):
        return [not_applicable(bound_id, side, "alpha outside [1/2, 1)") for side in ("lower", "upper")]
    rows = matrix_polynomial(p, build_alpha_matrix(d, s.alpha)).sum(axis=1)
    actual = float(p(s.radius))
    strict = not _rows_equal(rows)
    details = {"coefficients": [float(c) for c in p.coef]}
    return [
        make_result(bound_id, "lower", rows.min(), actual, tol, strict=strict, details=details),
        make_result(bound_id, "upper", rows.max(), actual, tol, strict=strict, details=details),
    ]


def shifted_quadratic(d: DistanceData, alpha: float, tr: int) -> Polynomial:
    """``x^2 - (1-alpha)(tr-1) x``."""
    return Polynomial([0.0, -(1.0 - alpha) * (tr - 1), 1.0])


def quadratic_chain_bounds(d: DistanceData, s: Spectrum, tol: float = DEFAULT_BOUND_TOL) -> list[BoundResult]:
    """Row sums of the shifted quadratics against their transmission estimates.

    With ``p_t`` built from the minimum transmission, every row sum of
    ``p_t(D_a)`` is at least ``a t^2 + 2(1-a)W - (1-a)(n-1)t``; symmetrically
    for the maximum transmission from above.
    """
    if not in_half_open_upper(s.alpha):
        return [not_applicable("rowsum_quadratic_chain", side, "alpha outside [1/2, 1)")
                for side in ("lower", "upper")]
    m = build_alpha_matrix(d, s.alpha)
    out = []
    for side, tr in (("lower", d.min_tr), ("upper", d.max_tr)):
        rows = matrix_polynomial(shifted_quadratic(d, s.alpha, tr), m).sum(axis=1)
        _, c = quadratic_transmission_terms(d, s.alpha, tr)
        actual = rows.min() if side == "lower" else rows.max()
        out.append(make_result("rowsum_quadratic_chain", side, c, actual, tol))
    return out


def weighted_transmission(d: DistanceData, vertex: int) -> int:
    return int(sum(int(x) * t for x, t in zip(d.dist[vertex], d.tr)))


def weighted_transmission_bounds(d: DistanceData, vertex: int, tol: float = DEFAULT_BOUND_TOL) -> list[BoundResult]:
    if not 0 <= vertex < d.n:
        raise IndexError(f"vertex {vertex} out of range 0..{d.n - 1}")
    actual = weighted_transmission(d, vertex)
    tu, n, W = d.tr[vertex], d.n, d.wiener
    lower = 2 * W + (d.min_tr - 1) * tu - (n - 1) * d.min_tr
    upper = 2 * W + (d.max_tr - 1) * tu - (n - 1) * d.max_tr
    details = {"vertex": vertex}
    return [
        make_result("weighted_transmission", "lower", lower, actual, tol, details=details),
        make_result("weighted_transmission", "upper", upper, actual, tol, details=details),
    ]


# ----------------------------------------------------------------- energy

def energy_bounds(d: DistanceData, s: Spectrum, inv: GraphInvariants,
                  tol: float = DEFAULT_BOUND_TOL) -> list[BoundResult]:
    a, n, W = s.alpha, d.n, d.wiener
    energy = inv.energy
    tr = d.tr_array
    out = []

    if in_half_open_upper(a):
        out.append(make_result("energy_complete_lower", "lower", 2.0 * (1 - a) * (n - 1), energy, tol,
                               structural=_complete(d)))
    else:
        out.append(not_applicable("energy_complete_lower", "lower", "alpha outside [1/2, 1)"))

    z = (1 - a) ** 2 * 2.0 * d.s_sum + a * a * math.fsum((tr - 2.0 * W / n) ** 2)
    out.append(make_result("energy_centered_frobenius", "upper", math.sqrt(n * z), energy, tol,
                           details={"Z": z}))

    # (a^2 sum Tr^2 + 2(1-a)^2 S) n - 4a^2W^2, regrouped to avoid cancellation
    radicand = n * centered_square_sum(d, a)
    out.append(make_result("energy_moment", "upper", math.sqrt(radicand), energy, tol))

    if in_half_open_upper(a):
        positive = s.smallest > tol * (1.0 + abs(s.radius))
        out.append(make_result("energy_half_radius", "upper", n * s.radius / 2.0, energy, tol,
                               strict=positive, details={"smallest_eigenvalue": s.smallest}))
    else:
        out.append(not_applicable("energy_half_radius", "upper", "alpha outside [1/2, 1)"))

    fro = frobenius_norm(build_alpha_matrix(d, a))
    total = float(sum(d.tr))
    bound = math.sqrt(a * a * d.tr_sq_sum + (1 - a) ** 2 * total * total / n)
    out.append(make_result("frobenius_transmission", "upper", bound, fro, tol, strict=n >= 3))
    return out


# ---------------------------------------------------------------- Estrada

def _sqrt_exp_sum(const: float, k: float, x: float) -> float:
    """``sqrt(const + k * e^x)`` without overflowing when e^x alone would."""
    if x / 2.0 > EXP_MAX:
        return math.inf
    if x <= EXP_MAX:
        return math.sqrt(const + k * math.exp(x))
    return math.exp(x / 2.0) * math.sqrt(const * math.exp(-x) + k)


def estrada_bounds(d: DistanceData, s: Spectrum, inv: GraphInvariants,
                   tol: float = DEFAULT_BOUND_TOL) -> list[BoundResult]:
    ids = ("estrada_moment_upper", "estrada_amgm_lower", "estrada_wiener_lower",
           "estrada_regular_lower", "estrada_energy_upper")
    sides = ("upper", "lower", "lower", "lower", "upper")
    if math.isinf(inv.estrada):
        return [not_applicable(i, side, f"Estrada index overflows (largest eigenvalue {s.radius:.6g})")
                for i, side in zip(ids, sides)]

    a, n, W = s.alpha, d.n, d.wiener
    dee = inv.estrada
    out = []

    omega = math.sqrt(a * a * d.tr_sq_sum + 2.0 * (1 - a) ** 2 * d.s_sum)
    out.append(make_result("estrada_moment_upper", "upper", n + 2 * a * W - 1 - omega + _exp(omega), dee, tol,
                           details={"omega": omega}))

    out.append(make_result("estrada_amgm_lower", "lower",
                           _sqrt_exp_sum(n + 4 * a * W, n * (n - 1), 4 * a * W / n), dee, tol))

    t = 2.0 * W / n
    out.append(make_result("estrada_wiener_lower", "lower", _exp(t) + (n - 1) + 2 * a * W - t, dee, tol))

    if d.is_transmission_regular():
        r = d.tr[0]
        out.append(make_result("estrada_regular_lower", "lower", _exp(r) + (n - 1) + 2 * a * r - r, dee, tol,
                               details={"r": r}))
    else:
        out.append(not_applicable("estrada_regular_lower", "lower", "not transmission regular"))

    e = inv.energy
    center = 2 * a * W / n
    if center + e > EXP_MAX:
        bound = math.inf
    else:
        bound = math.exp(center) * (n - 1 - e + math.exp(e))
    out.append(make_result("estrada_energy_upper", "upper", bound, dee, tol))
    return out


# -------------------------------------------------------- quotient matrices

def vertex_quotient(d: DistanceData, alpha: float, vertex: int) -> np.ndarray:
    """2x2 quotient of ``D_a`` for the partition ``{vertex}``, rest, in closed form."""
    t, n, W = d.tr[vertex], d.n, d.wiener
    return np.array([
        [alpha * t, (1 - alpha) * t],
        [(1 - alpha) * t / (n - 1), (2 * W - (2 - alpha) * t) / (n - 1)],
    ])


def printed_spread(d: DistanceData, alpha: float, vertex: int) -> float:
    """Gap formula with the squared transmission inside the first term, as it appears in print."""
    t, n, W = d.tr[vertex], d.n, d.wiener
    rad = (2 * W - 2 * t + alpha * n * t * t) ** 2 - 4 * (n - 1) * (2 * alpha * t * W - t * t)
    return _sqrt_or_nan(rad) / (n - 1)


def spread_bound(d: DistanceData, s: Spectrum, vertex: int, tol: float = DEFAULT_BOUND_TOL) -> BoundResult:
    if not 0 <= vertex < d.n:
        raise IndexError(f"vertex {vertex} out of range 0..{d.n - 1}")
    if d.n < 3:
        return not_applicable("spread_quotient", "lower", "needs n >= 3")
    q = vertex_quotient(d, s.alpha, vertex)
    l1, l2 = eigenvalues_2x2(q)
    printed = printed_spread(d, s.alpha, vertex)
    gap = l1 - l2
    return make_result("spread_quotient", "lower", gap, s.radius - s.smallest, tol, details={
        "vertex": vertex,
        "quotient": q.tolist(),
        "printed_value": printed,
        "printed_minus_quotient": printed - gap,
    })


def quotient_interlacing_check(m, s: Spectrum | np.ndarray, partition,
                               tol: float = DEFAULT_BOUND_TOL) -> BoundResult:
    """Check ``sigma_1 >= mu_1 >= sigma_{n-1}`` and ``sigma_2 >= mu_2 >= sigma_n``.

    Reports the tightest of the four inequalities.
    """
    q = quotient_matrix(m, partition)
    if q.m != 2:
        raise ValueError(f"expected a 2-block partition, got {q.m} blocks")
    sigma = np.asarray(getattr(s, "values", s), dtype=float)
    n = sigma.size
    mu1, mu2 = eigenvalues_2x2(q)
    checks = [
        ("upper", sigma[0], mu1),
        ("lower", sigma[n - 2], mu1),
        ("upper", sigma[1], mu2),
        ("lower", sigma[n - 1], mu2),
    ]
    results = [make_result("quotient_interlacing", side, bound, actual, tol) for side, bound, actual in checks]
    worst = min(results, key=lambda r: r.slack)
    worst.details = {"mu": [mu1, mu2], "partition": [list(b) for b in q.partition]}
    return worst


# ------------------------------------------------------------------ sweeps

def _worst(results: Iterable[BoundResult]) -> BoundResult:
    return min(results, key=lambda r: r.slack)


def evaluate_all(d: DistanceData, s: Spectrum, inv: GraphInvariants, tol: float = DEFAULT_BOUND_TOL,
                 selection: Iterable[str] | None = None) -> list[BoundResult]:
    """Every bound for one (graph, alpha), in :data:`BOUND_IDS` order.

    Per-vertex families (weighted transmission, quotient spread) keep the
    vertex with the smallest slack on each side.
    """
    a = s.alpha
    out = radius_bounds(d, s, tol)
    out += poly_rowsum_bound(d, s, Polynomial([0.0, 1.0]), tol, "rowsum_poly_x")
    out += poly_rowsum_bound(d, s, Polynomial([0.0, 0.0, 1.0]), tol, "rowsum_poly_x2")
    out += poly_rowsum_bound(d, s, shifted_quadratic(d, a, d.min_tr), tol, "rowsum_poly_shifted")
    out += quadratic_chain_bounds(d, s, tol)
    per_vertex = [weighted_transmission_bounds(d, v, tol) for v in range(d.n)]
    out += [_worst(r[0] for r in per_vertex), _worst(r[1] for r in per_vertex)]
    out += energy_bounds(d, s, inv, tol)
    out += estrada_bounds(d, s, inv, tol)
    if d.n >= 3:
        out.append(_worst(spread_bound(d, s, v, tol) for v in range(d.n)))
    else:
        out.append(not_applicable("spread_quotient", "lower", "needs n >= 3"))
    if d.n >= 2:
        half = d.n // 2
        partition = [list(range(half)), list(range(half, d.n))]
        out.append(quotient_interlacing_check(build_alpha_matrix(d, a), s, partition, tol))

    order = {b: i for i, b in enumerate(BOUND_IDS)}
    out.sort(key=lambda r: (order[r.bound_id], r.side))
    if selection is not None:
        keep = set(selection)
        out = [r for r in out if r.bound_id in keep]
    return out
