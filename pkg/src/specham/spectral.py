"""Largest eigenvalues of graph matrices and the classical spectral bounds.

The solver is shifted power iteration with a Rayleigh-quotient estimate and a
residual stopping rule.  For a symmetric matrix, ``||Mx - lam x||_2 <= tol``
puts ``lam`` within ``tol`` of an eigenvalue; the Gershgorin shift makes the
iteration matrix positive semidefinite, so the dominant eigenvalue of the
shifted matrix is the algebraically largest one of ``M``.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field

import numpy as np

from .graph import Graph, complement

DEFAULT_TOL = 1e-10
DEFAULT_MAX_ITER = 10**6


class SpectralError(ArithmeticError):
    pass


class NotSymmetricError(SpectralError, ValueError):
    pass


class ConvergenceError(SpectralError):
    pass


@dataclass
class EigenEstimate:
    value: float
    vector: np.ndarray = field(repr=False)
    residual: float
    iterations: int
    tolerance: float


def adjacency_matrix(g: Graph) -> np.ndarray:
    return g.adjacency(float)


def signless_laplacian(g: Graph) -> np.ndarray:
    a = g.adjacency(float)
    a[np.diag_indices_from(a)] = g.degrees()
    return a


def _as_symmetric(m) -> np.ndarray:
    a = np.asarray(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NotSymmetricError("matrix must be square")
    if a.shape[0] == 0:
        raise ValueError("matrix must have order >= 1")
    if not np.isfinite(a).all():
        raise ValueError("matrix has non-finite entries")
    if not np.array_equal(a, a.T):
        raise NotSymmetricError("matrix is not symmetric")
    return a


def gershgorin_shift(a: np.ndarray) -> float:
    """Smallest c >= 0 with every Gershgorin disc of ``a + cI`` in [0, inf)."""
    radii = np.abs(a).sum(axis=1) - np.abs(np.diag(a))
    return float(max(0.0, -(np.diag(a) - radii).min()))


def _power(b: np.ndarray, shift: float, tol: float, max_iter: int,
           starts, project: np.ndarray | None = None) -> EigenEstimate:
    """Power iteration on the PSD matrix ``b``; values are reported minus ``shift``."""
    n = b.shape[0]
    for x in starts:
        if project is not None:
            x = x - project * (project @ x)
        norm = math.sqrt(x @ x)
        if norm <= 1e-12:
            continue
        x = x / norm
        tol2 = tol * tol
        for it in range(1, max_iter + 1):
            y = b @ x
            if project is not None:
                y -= project * (project @ y)
            lam = float(x @ y)
            r = y - lam * x
            if r @ r <= tol2:
                if x.sum() < 0:
                    x = -x
                return EigenEstimate(lam - shift, x, float(np.abs(r).max()), it, tol)
            ny = math.sqrt(y @ y)
            if ny == 0.0:
                # x spans a null direction of b: eigenvalue -shift, exact
                return EigenEstimate(-shift, x, 0.0, it, tol)
            x = y / ny
        raise ConvergenceError(
            f"power iteration did not reach tol={tol:g} in {max_iter} iterations (n={n})")
    raise ConvergenceError("no usable start vector")


def _starts(n: int, nonnegative: bool):
    # all-ones meets the Perron vector of a nonnegative matrix; otherwise (and as
    # a fallback) seeded Gaussian vectors avoid any fixed eigenspace
    if nonnegative:
        yield np.full(n, 1.0)
    rng = np.random.default_rng(n)
    for _ in range(8):
        yield rng.standard_normal(n)


def largest_eigenvalue(m, tol: float = DEFAULT_TOL,
                       max_iter: int = DEFAULT_MAX_ITER) -> EigenEstimate:
    """Algebraically largest eigenvalue of a real symmetric matrix.

    Deterministic: nonnegative matrices start from the all-ones vector, others
    from a Gaussian vector seeded by the order.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    a = _as_symmetric(m)
    c = gershgorin_shift(a)
    b = a + c * np.eye(a.shape[0])
    return _power(b, c, tol, max_iter, _starts(a.shape[0], bool((a >= 0).all())))


def second_eigenvalue(m, top: EigenEstimate | None = None, tol: float = 1e-8,
                      max_iter: int = DEFAULT_MAX_ITER) -> EigenEstimate:
    """Second largest eigenvalue (with multiplicity) by deflating the top eigenvector."""
    a = _as_symmetric(m)
    n = a.shape[0]
    if n < 2:
        raise ValueError("need order >= 2")
    if top is None:
        top = largest_eigenvalue(a, tol=min(tol, DEFAULT_TOL), max_iter=max_iter)
    v = top.vector / np.linalg.norm(top.vector)
    c = gershgorin_shift(a)
    b = a + c * np.eye(n)
    # replace lambda_1 + c by 0; the rest of the shifted spectrum is >= 0
    b = b - (top.value + c) * np.outer(v, v)
    return _power(b, c, tol, max_iter, _starts(n, False), project=v)


def spectral_radius(g: Graph, tol: float = DEFAULT_TOL) -> float:
    if g.n == 0:
        return 0.0
    return largest_eigenvalue(adjacency_matrix(g), tol).value


def q_index(g: Graph, tol: float = DEFAULT_TOL) -> float:
    if g.n == 0:
        return 0.0
    return largest_eigenvalue(signless_laplacian(g), tol).value


# -- bounds ----------------------------------------------------------------


def hong_bound(n: int, e: int) -> float:
    """Upper bound sqrt(2e - n + 1) on mu(G); valid without isolated vertices."""
    return math.sqrt(2 * e - n + 1)


def feng_yu_bound(n: int, e: int) -> float:
    """Upper bound 2e/(n-1) + n - 2 on q(G)."""
    return 2 * e / (n - 1) + n - 2


def hofmeister_bound(degrees) -> float:
    """Lower bound sqrt(sum d^2 / n) on mu(G)."""
    d = np.asarray(degrees, dtype=float)
    return math.sqrt(float(d @ d) / len(d))


@dataclass
class SpectralReport:
    n: int
    e: int
    mu: float
    q: float
    mu_complement: float
    hong: float | None
    feng_yu: float | None
    hofmeister: float
    tol: float
    iterations: dict

    def to_dict(self) -> dict:
        return asdict(self)


def spectral_report(g: Graph, tol: float = DEFAULT_TOL) -> SpectralReport:
    if g.n < 1:
        raise ValueError("spectral_report needs n >= 1")
    mu = largest_eigenvalue(adjacency_matrix(g), tol)
    q = largest_eigenvalue(signless_laplacian(g), tol)
    co = largest_eigenvalue(adjacency_matrix(complement(g)), tol)
    n, e = g.n, g.edge_count
    return SpectralReport(
        n=n,
        e=e,
        mu=mu.value,
        q=q.value,
        mu_complement=co.value,
        hong=None if g.has_isolated_vertex() else hong_bound(n, e),
        feng_yu=feng_yu_bound(n, e) if n >= 2 else None,
        hofmeister=hofmeister_bound(g.degrees()),
        tol=tol,
        iterations={"mu": mu.iterations, "q": q.iterations, "mu_complement": co.iterations},
    )
