"""Combinatorial Laplacians and their spectral gaps.

Whether a gap is zero is decided by exact rational ranks; the floating point
spectrum (cyclic Jacobi) only supplies the magnitude of nonzero gaps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .algebra import betti, rank, rational_rank, signed_boundary
from .complex import SimplicialComplex
from .errors import DimensionOutOfRange, NoConvergence, NonSymmetric

KINDS = ("up", "down", "full")


@dataclass(frozen=True)
class Laplacian:
    kind: str
    dimension: int
    matrix: np.ndarray
    reduced: bool = False


@dataclass(frozen=True)
class SpectralReport:
    eigenvalues: np.ndarray  # ascending
    zero_multiplicity: int  # exact kernel dimension
    gap: float  # smallest eigenvalue past the zero block (inf if none)


def laplacian(X: SimplicialComplex, k: int, kind: str = "full", reduced: bool = False) -> Laplacian:
    """L_k^up = B_{k+1} B_{k+1}^T, L_k^down = B_k^T B_k, full = up + down.

    Without ``reduced`` the down part at k = 0 is zero; with it, B_0 is the
    augmentation row.
    """
    if not 0 <= k <= X.dim:
        raise DimensionOutOfRange(f"dimension {k} outside 0..{X.dim}")
    if kind not in KINDS:
        raise ValueError(f"unknown Laplacian kind {kind!r}")
    n = X.n(k)
    mat = np.zeros((n, n), dtype=np.int64)
    if kind in ("up", "full"):
        b = signed_boundary(X, k + 1)
        mat += b @ b.T
    if kind in ("down", "full"):
        b = signed_boundary(X, k, reduced)
        mat += b.T @ b
    return Laplacian(kind, k, mat, reduced)


def jacobi_eigenvalues(a, tol: float = 1e-10, max_sweeps: int = 100) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations, ascending.

    Stops once every off-diagonal magnitude is below ``tol * ||a||_F``.
    """
    a = np.array(a, dtype=np.float64)
    n = a.shape[0]
    if a.shape != (n, n):
        raise NonSymmetric("matrix is not square")
    norm = np.linalg.norm(a)
    if not np.allclose(a, a.T, rtol=0, atol=1e-12 * max(norm, 1.0)):
        raise NonSymmetric("matrix is not symmetric")
    if n == 0:
        return np.zeros(0)
    a = (a + a.T) / 2
    thresh = tol * norm
    for _ in range(max_sweeps):
        off = np.abs(a - np.diag(np.diag(a)))
        if off.max(initial=0.0) < thresh or norm == 0:
            return np.sort(np.diag(a))
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) < thresh * 1e-3:
                    continue
                theta = (a[q, q] - a[p, p]) / (2 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1))
                c = 1 / math.sqrt(t * t + 1)
                s = t * c
                ap, aq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                ap, aq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * ap - s * aq
                a[q, :] = s * ap + c * aq
                a[p, q] = a[q, p] = 0.0
    raise NoConvergence(f"no convergence after {max_sweeps} sweeps")


def symmetric_spectrum(M, tol: float = 1e-10, zero_band: float = 1e-8) -> SpectralReport:
    """Sorted spectrum with an exact zero multiplicity.

    Integer matrices (all Laplacians) get their kernel dimension from an exact
    rational rank; other matrices fall back to counting eigenvalues below
    ``zero_band``.
    """
    mat = M.matrix if isinstance(M, Laplacian) else np.asarray(M)
    ev = jacobi_eigenvalues(mat, tol)
    if np.issubdtype(mat.dtype, np.integer):
        zero = mat.shape[0] - rational_rank(mat)
    else:
        zero = int(np.sum(np.abs(ev) < zero_band))
    gap = float(ev[zero]) if zero < len(ev) else math.inf
    return SpectralReport(ev, zero, gap)


def spectral_gap(X: SimplicialComplex, k: int, direction: str = "up", reduced: bool = False,
                 tol: float = 1e-10) -> float:
    """lambda^k (direction "up") or lambda_k (direction "down").

    Exactly 0 when the rational (co)homology in degree k is nonzero. Otherwise
    the smallest eigenvalue of L_k^up (or L_k^down) past its exact kernel,
    whose dimension is that of ker delta^k (or ker boundary_k). Returns inf
    when the admissible set is empty.
    """
    if direction not in ("up", "down"):
        raise ValueError(f"unknown direction {direction!r}")
    if betti(X, k, "rational", reduced) > 0:
        return 0.0
    if direction == "up":
        kernel = X.n(k) - rank(X, k + 1, "rational")
    else:
        kernel = X.n(k) - rank(X, k, "rational", reduced)
    if kernel >= X.n(k):
        return math.inf
    L = laplacian(X, k, direction, reduced)
    return float(jacobi_eigenvalues(L.matrix, tol)[kernel])


def nonzero_spectrum(M, tol: float = 1e-10) -> np.ndarray:
    """Eigenvalues past the exact kernel of an integer symmetric matrix."""
    rep = symmetric_spectrum(M, tol)
    return rep.eigenvalues[rep.zero_multiplicity:]
