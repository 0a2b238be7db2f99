"""Dense symmetric eigenvalues, Frobenius norms and block quotient matrices.

The eigensolver reduces to tridiagonal form with Householder reflections
and then runs implicit-shift QL on the tridiagonal (values only).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

EPS = np.finfo(float).eps
DEFAULT_TOL = 1e-12


class EigenConvergenceError(ArithmeticError):
    def __init__(self, index: int, residual: float, iterations: int):
        self.index = index
        self.residual = residual
        self.iterations = iterations
        super().__init__(
            f"QL iteration did not converge for eigenvalue {index} after {iterations} "
            f"iterations (off-diagonal residual {residual:.3e})"
        )


class ComplexEigenvalueError(ArithmeticError):
    pass


def as_symmetric(m) -> np.ndarray:
    """Return ``m`` as a float array, refusing anything not exactly symmetric."""
    a = np.asarray(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if a.shape[0] < 1:
        raise ValueError("matrix must be at least 1x1")
    if not np.array_equal(a, a.T):
        raise ValueError("matrix is not exactly symmetric")
    return a


def tridiagonalize(m) -> tuple[np.ndarray, np.ndarray]:
    """Householder reduction; returns (diagonal, off-diagonal)."""
    a = np.array(as_symmetric(m), dtype=float, copy=True)
    n = a.shape[0]
    for k in range(n - 2):
        x = a[k + 1:, k]
        xnorm = math.sqrt(float(x @ x))
        if xnorm == 0.0 or not x[1:].any():
            continue
        alpha = -math.copysign(xnorm, x[0])
        v = x.copy()
        v[0] -= alpha
        v /= math.sqrt(float(v @ v))
        sub = a[k + 1:, k + 1:]
        p = sub @ v
        w = 2.0 * (p - float(v @ p) * v)
        # v w^T + w v^T is exactly symmetric elementwise, so the block stays symmetric
        sub -= np.outer(v, w) + np.outer(w, v)
        a[k + 1, k] = a[k, k + 1] = alpha
        a[k + 2:, k] = 0.0
        a[k, k + 2:] = 0.0
    return np.diag(a).copy(), np.diag(a, 1).copy()


def tridiagonal_eigenvalues(diag, offdiag, tol: float = DEFAULT_TOL, max_iter: int | None = None) -> list[float]:
    """Implicit-shift QL on a symmetric tridiagonal matrix (unsorted output)."""
    d = [float(x) for x in diag]
    n = len(d)
    e = [float(x) for x in offdiag] + [0.0]
    if len(e) != n:
        raise ValueError("off-diagonal must have length n - 1")
    tol = max(tol, EPS)
    cap = 100 * n if max_iter is None else max_iter
    # absolute floor keeps deflation working near underflow
    floor = EPS * max((abs(x) for x in d + e), default=0.0)
    total = 0
    for l in range(n):
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= tol * dd or abs(e[m]) <= floor:
                    break
                m += 1
            if m == l:
                break
            total += 1
            if total > cap:
                raise EigenConvergenceError(l, abs(e[l]), total - 1)
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            i = m - 1
            restarted = False
            while i >= l:
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    restarted = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                i -= 1
            if restarted:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    return d


def sym_eigenvalues(m, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix, sorted descending."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    a = as_symmetric(m)
    if a.shape[0] == 1:
        return np.array([a[0, 0]])
    d, e = tridiagonalize(a)
    values = np.array(tridiagonal_eigenvalues(d, e, tol))
    return -np.sort(-values, kind="stable")


def frobenius_norm(m) -> float:
    a = np.asarray(m, dtype=float)
    return math.sqrt(math.fsum((a * a).ravel()))


@dataclass(frozen=True, eq=False)
class QuotientMatrix:
    """Block-averaged matrix: entry (i, j) is the block sum over rows K_i, cols K_j divided by |K_i|."""

    entries: np.ndarray
    partition: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.partition)


def _check_partition(partition: Sequence[Sequence[int]], n: int) -> tuple[tuple[int, ...], ...]:
    blocks = tuple(tuple(int(i) for i in block) for block in partition)
    seen: set[int] = set()
    for b, block in enumerate(blocks):
        if not block:
            raise ValueError(f"partition block {b} is empty")
        for i in block:
            if not 0 <= i < n:
                raise ValueError(f"index {i} in block {b} out of range 0..{n - 1}")
            if i in seen:
                raise ValueError(f"index {i} appears in more than one block")
            seen.add(i)
    if len(seen) != n:
        missing = sorted(set(range(n)) - seen)
        raise ValueError(f"partition does not cover indices {missing}")
    return blocks


def quotient_matrix(m, partition) -> QuotientMatrix:
    a = as_symmetric(m)
    blocks = _check_partition(partition, a.shape[0])
    k = len(blocks)
    q = np.empty((k, k))
    for i, rows in enumerate(blocks):
        for j, cols in enumerate(blocks):
            q[i, j] = a[np.ix_(rows, cols)].sum() / len(rows)
    return QuotientMatrix(q, blocks)


def eigenvalues_2x2(q, tol: float = 1e-10) -> tuple[float, float]:
    """Real eigenvalues ``(l1, l2)``, ``l1 >= l2``, of a 2x2 matrix with real spectrum.

    The discriminant is formed as ``(a - d)^2 + 4bc`` and a negative value
    down to ``-tol * (1 + trace^2)`` is clamped to zero.
    """
    a = np.asarray(q.entries if isinstance(q, QuotientMatrix) else q, dtype=float)
    if a.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {a.shape}")
    (p, b), (c, d) = a
    tr = p + d
    det = p * d - b * c
    disc = (p - d) ** 2 + 4.0 * b * c
    if disc < 0:
        if disc < -tol * (1.0 + tr * tr):
            raise ComplexEigenvalueError(f"discriminant {disc:.3e} < 0: eigenvalues are complex")
        disc = 0.0
    root = math.sqrt(disc)
    if tr >= 0:
        l1 = 0.5 * (tr + root)
        l2 = det / l1 if l1 != 0.0 else 0.5 * (tr - root)
    else:
        l2 = 0.5 * (tr - root)
        l1 = det / l2
    return (l1, l2) if l1 >= l2 else (l2, l1)
