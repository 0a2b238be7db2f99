"""The alpha-distance matrix, its spectrum, energy and Estrada index."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graphs import DistanceData, Graph, GraphError, all_pairs_distances
from .linalg import DEFAULT_TOL, sym_eigenvalues

# exp() overflows a double just above this
EXP_MAX = 709.782712893384


class EstradaRangeError(OverflowError):
    def __init__(self, eigenvalue: float):
        self.eigenvalue = eigenvalue
        super().__init__(f"exp({eigenvalue!r}) overflows double precision")


def _check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    return alpha


def build_alpha_matrix(d: DistanceData, alpha: float) -> np.ndarray:
    """``alpha * diag(Tr) + (1 - alpha) * D``, symmetric by construction."""
    alpha = _check_alpha(alpha)
    m = (1.0 - alpha) * d.dist.astype(float)
    m[np.diag_indices(d.n)] = alpha * d.tr_array
    return m


def signless_laplacian(d: DistanceData) -> np.ndarray:
    """``diag(Tr) + D``; equals twice the alpha = 1/2 matrix."""
    m = d.dist.astype(float)
    m[np.diag_indices(d.n)] = d.tr_array
    return m


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Descending eigenvalues of the alpha-distance matrix of one graph.

    ``centered`` shifts every eigenvalue by the mean ``2*alpha*W/n``.
    """

    alpha: float
    values: np.ndarray
    centered: np.ndarray
    n: int
    wiener: int

    @property
    def radius(self) -> float:
        return float(self.values[0])

    @property
    def smallest(self) -> float:
        return float(self.values[-1])

    @property
    def center(self) -> float:
        return 2.0 * self.alpha * self.wiener / self.n


def alpha_spectrum(d: DistanceData, alpha: float, tol: float = DEFAULT_TOL) -> Spectrum:
    alpha = _check_alpha(alpha)
    values = sym_eigenvalues(build_alpha_matrix(d, alpha), tol)
    values.setflags(write=False)
    centered = values - 2.0 * alpha * d.wiener / d.n
    centered.setflags(write=False)
    return Spectrum(alpha=alpha, values=values, centered=centered, n=d.n, wiener=d.wiener)


def alpha_energy(s: Spectrum) -> float:
    return math.fsum(abs(x) for x in s.centered)


def alpha_estrada(s: Spectrum) -> float:
    top = s.radius
    if top > EXP_MAX:
        raise EstradaRangeError(top)
    return math.fsum(math.exp(x) for x in s.values)


@dataclass(frozen=True)
class GraphInvariants:
    energy: float
    estrada: float
    moment1: float
    moment2: float


def graph_invariants(s: Spectrum) -> GraphInvariants:
    """Energy, Estrada index and the first two power sums of ``s``.

    ``estrada`` is ``inf`` when an eigenvalue is too large to exponentiate.
    """
    try:
        estrada = alpha_estrada(s)
    except EstradaRangeError:
        estrada = math.inf
    return GraphInvariants(
        energy=alpha_energy(s),
        estrada=estrada,
        moment1=math.fsum(s.values),
        moment2=math.fsum(x * x for x in s.values),
    )


def moment_identities(d: DistanceData, s: Spectrum) -> tuple[float, float, float, float]:
    """``(sum sigma, 2*alpha*W, sum sigma^2, alpha^2*sum Tr^2 + 2*(1-alpha)^2*S)``."""
    a = s.alpha
    return (
        math.fsum(s.values),
        2.0 * a * d.wiener,
        math.fsum(x * x for x in s.values),
        a * a * d.tr_sq_sum + 2.0 * (1.0 - a) ** 2 * d.s_sum,
    )


def distance_signless_laplacian_energy(d: DistanceData, tol: float = DEFAULT_TOL) -> float:
    """``sum |nu_i - 2W/n|`` over the eigenvalues of ``diag(Tr) + D``."""
    nu = sym_eigenvalues(signless_laplacian(d), tol)
    center = 2.0 * d.wiener / d.n
    return math.fsum(abs(x - center) for x in nu)


def tree_distance_checks(g: Graph, tol: float = 1e-9) -> tuple[float, int]:
    """Determinant of the distance matrix of a tree and its count of positive eigenvalues.

    The determinant is the product of the alpha = 0 eigenvalues.
    """
    if not g.is_tree():
        raise GraphError(f"expected a tree, got n={g.n}, m={g.m}")
    d = all_pairs_distances(g)
    s = alpha_spectrum(d, 0.0)
    scale = max(1.0, abs(s.radius))
    return math.prod(s.values.tolist()), int(np.sum(s.values > tol * scale))


def tree_distance_determinant(n: int) -> int:
    """Closed form ``(-1)^(n-1) (n-1) 2^(n-2)`` for any tree on ``n >= 2`` vertices."""
    if n < 2:
        raise ValueError("needs n >= 2")
    return (-1) ** (n - 1) * (n - 1) * 2 ** (n - 2)
