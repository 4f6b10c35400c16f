"""Spectra of adjacency matrices.

All spectra are returned in descending order.  The dense symmetric
eigenproblem is delegated to LAPACK through numpy (``eigvalsh``/``eigh``),
whose symmetric solvers converge unconditionally; a failure is surfaced as
NonConvergenceError rather than a raw LinAlgError.

The shared zero classification rule lives here: an eigenvalue counts as
zero when |value| <= zero_tol, and the default tolerance scales with the
matrix order as 1e-9 * m.
"""

from __future__ import annotations

import numpy as np

from .graphs import Graph


class NonConvergenceError(RuntimeError):
    """The underlying eigenvalue iteration failed to converge."""


def default_zero_tol(order: int) -> float:
    return 1e-9 * order


def eigvals_symmetric(a: np.ndarray) -> np.ndarray:
    """Descending eigenvalues of a symmetric matrix."""
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("expected a square matrix")
    if not np.allclose(a, a.T, rtol=0.0, atol=1e-12):
        raise ValueError("matrix is not symmetric")
    try:
        vals = np.linalg.eigvalsh(a)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK safety net
        raise NonConvergenceError(str(exc)) from exc
    return vals[::-1].copy()


def spectrum(g: Graph) -> np.ndarray:
    """Descending adjacency spectrum of a graph."""
    return eigvals_symmetric(g.adjacency())


def eigensystem(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    """Descending eigenvalues and matching orthonormal eigenvector columns."""
    try:
        vals, vecs = np.linalg.eigh(g.adjacency())
    except np.linalg.LinAlgError as exc:  # pragma: no cover
        raise NonConvergenceError(str(exc)) from exc
    return vals[::-1].copy(), vecs[:, ::-1].copy()


def spectra_batch(stack: np.ndarray) -> np.ndarray:
    """Descending spectra of a (n, m, m) stack of symmetric matrices.

    Fast path for census work; symmetry of the input is the caller's
    responsibility.
    """
    try:
        vals = np.linalg.eigvalsh(stack)
    except np.linalg.LinAlgError as exc:  # pragma: no cover
        raise NonConvergenceError(str(exc)) from exc
    return vals[:, ::-1]


def nullity(values: np.ndarray, zero_tol: float | None = None) -> int:
    """Number of eigenvalues classified as zero."""
    values = np.asarray(values, dtype=float)
    tol = default_zero_tol(values.size) if zero_tol is None else zero_tol
    return int(np.count_nonzero(np.abs(values) <= tol))
