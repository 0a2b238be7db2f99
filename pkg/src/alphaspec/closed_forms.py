"""Exact spectra and energies for stars and complete graphs, and twin-vertex eigenvalues."""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .graphs import DistanceData, Graph, GraphError, all_pairs_distances


@dataclass(frozen=True)
class ClosedFormSpectrum:
    values_with_multiplicity: tuple[tuple[float, int], ...]
    source: str

    @property
    def n(self) -> int:
        return sum(k for _, k in self.values_with_multiplicity)

    def expanded(self) -> np.ndarray:
        """All eigenvalues with multiplicity, sorted descending."""
        out = [v for v, k in self.values_with_multiplicity for _ in range(k)]
        return -np.sort(-np.array(out, dtype=float))


def _star_radicand(n: int, alpha: float) -> float:
    return (alpha - 2) ** 2 * n * n + 8 * alpha * n - 12 * n - 8 * alpha + 12


def star_spectrum(n: int, alpha: float) -> ClosedFormSpectrum:
    """Spectrum of the star on ``n >= 3`` vertices.

    ``(2n-1)*alpha - 2`` with multiplicity ``n - 2`` from the leaves, plus
    the two roots of the center/leaf quadratic.
    """
    if n < 3:
        raise GraphError(f"star closed form needs n >= 3, got {n}")
    root = math.sqrt(_star_radicand(n, alpha))
    mid = alpha * n + 2 * n - 4
    return ClosedFormSpectrum(
        (((mid + root) / 2, 1), ((2 * n - 1) * alpha - 2, n - 2), ((mid - root) / 2, 1)),
        "star",
    )


def star_radius(n: int, alpha: float) -> float:
    if n < 4:
        raise GraphError(f"star radius bound is stated for n >= 4, got {n}")
    b = (alpha + 2) * n - 4
    return (b + math.sqrt(b * b + 4 * (n - 1) * (2 * alpha - 2 * n * alpha + 1))) / 2


def star_energy(n: int, alpha: float) -> float:
    """Alpha-distance energy of the star, evaluated term by term."""
    if n < 3:
        raise GraphError(f"star energy needs n >= 3, got {n}")
    base = alpha * (-3 * n * n + 8 * n - 4) + 2 * n * n - 4 * n
    root = n * math.sqrt(_star_radicand(n, alpha))
    return (
        (base + root) / (2 * n)
        + abs((base - root) / (2 * n))
        + abs(3 * alpha - 2 - 2 * alpha / n) * (n - 2)
    )


def complete_spectrum(n: int, alpha: float) -> ClosedFormSpectrum:
    if n < 2:
        raise GraphError(f"complete graph spectrum needs n >= 2, got {n}")
    return ClosedFormSpectrum(((n - 1.0, 1), (alpha * n - 1.0, n - 1)), "complete")


def subset_eigenvalue(g: Graph, subset, alpha: float, d: DistanceData | None = None):
    """Eigenvalue forced by a set of twin vertices.

    Every vertex of ``subset`` must have the same neighbours outside it and
    the subset must be independent or a clique. Returns
    ``(eigenvalue, min_multiplicity, kind)``.
    """
    verts = sorted(set(subset))
    if len(verts) < 2:
        raise GraphError("subset needs at least two vertices")
    for v in verts:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range")
    inside = set(verts)
    adj = g.neighbors
    outside = [adj[v] - inside for v in verts]
    for (i, x), (j, y) in combinations(enumerate(verts), 2):
        if outside[i] != outside[j]:
            raise GraphError(f"vertices {x} and {y} have different neighbourhoods outside the subset")
    pairs = list(combinations(verts, 2))
    joined = [(x, y) for x, y in pairs if y in adj[x]]
    if not joined:
        kind = "independent"
    elif len(joined) == len(pairs):
        kind = "clique"
    else:
        x, y = next(p for p in pairs if p[1] not in adj[p[0]])
        raise GraphError(f"subset is neither independent nor a clique: ({x}, {y}) not adjacent")

    d = d or all_pairs_distances(g)
    h = d.tr[verts[0]]
    if kind == "independent":
        value = alpha * (h + 2) - 2
    else:
        value = alpha * (h + 1) - 1
    return value, len(verts) - 1, kind


def distinct_eigenvalue_count(values, cluster_tol: float = 1e-7) -> int:
    """Number of clusters when consecutive sorted eigenvalues closer than ``cluster_tol`` merge.

    Accepts a :class:`~alphaspec.spectra.Spectrum` or any sequence of reals.
    """
    if cluster_tol <= 0:
        raise ValueError("cluster_tol must be positive")
    v = np.sort(np.asarray(getattr(values, "values", values), dtype=float))
    if v.size == 0:
        return 0
    return 1 + int(np.sum(np.diff(v) > cluster_tol))


def multiplicity_near(values, target: float, tol: float = 1e-7) -> int:
    v = np.asarray(getattr(values, "values", values), dtype=float)
    return int(np.sum(np.abs(v - target) <= tol))
