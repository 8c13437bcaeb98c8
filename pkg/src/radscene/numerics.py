"""Deterministic numerical kernels with explicit accuracy contracts.

Everything here is a thin, contract-checked wrapper around LAPACK (via
numpy) and special functions (via scipy), plus a fixed sign convention so
that eigen/singular vectors are reproducible across runs and platforms.
"""

from dataclasses import dataclass

import numpy as np
from scipy import special

from .errors import NonFinite, NotSymmetric, OutOfRange


@dataclass(frozen=True)
class EigResult:
    eigenvalues: np.ndarray   # descending
    eigenvectors: np.ndarray  # orthonormal columns


@dataclass(frozen=True)
class SvdResult:
    U: np.ndarray                # p x q, orthonormal columns
    singular_values: np.ndarray  # length q, descending, >= 0
    V: np.ndarray                # q x q orthogonal; A = U diag(s) V'


def _fix_signs(Q):
    """Flip column signs so the largest-magnitude entry of each column is
    non-negative (ties broken by lowest row index, which argmax gives)."""
    idx = np.argmax(np.abs(Q), axis=0)
    signs = np.sign(Q[idx, np.arange(Q.shape[1])])
    signs[signs == 0] = 1.0
    return signs


def sym_eig(A):
    """Eigendecomposition of a symmetric matrix, eigenvalues descending."""
    A = np.asarray(A, dtype=float)
    if not np.all(np.isfinite(A)):
        raise NonFinite("matrix has non-finite entries")
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise NotSymmetric(f"expected a square matrix, got shape {A.shape}")
    scale = 1.0 + np.max(np.abs(A))
    if np.max(np.abs(A - A.T)) > 1e-10 * scale:
        raise NotSymmetric("matrix is not symmetric within tolerance")
    w, Q = np.linalg.eigh((A + A.T) / 2.0)
    w = w[::-1]
    Q = Q[:, ::-1]
    Q = Q * _fix_signs(Q)
    return EigResult(eigenvalues=w, eigenvectors=Q)


def svd(A):
    """Thin SVD A = U diag(s) V' for p >= q, with the sign convention
    applied to the columns of U (and compensated in V)."""
    A = np.asarray(A, dtype=float)
    if not np.all(np.isfinite(A)):
        raise NonFinite("matrix has non-finite entries")
    p, q = A.shape
    if p < q:
        raise OutOfRange(f"expected p >= q, got shape {A.shape}")
    U, s, Vt = np.linalg.svd(A, full_matrices=False)
    signs = _fix_signs(U)
    U = U * signs
    Vt = Vt * signs[:, None]
    return SvdResult(U=U, singular_values=s, V=Vt.T)


def norm_quantile(u):
    """Standard normal quantile Phi^{-1}(u) for u in (0, 1).

    Accepts scalars or arrays; every entry must lie strictly inside (0, 1).
    """
    arr = np.asarray(u, dtype=float)
    if np.any(~np.isfinite(arr)) or np.any(arr <= 0.0) or np.any(arr >= 1.0):
        raise OutOfRange("probability must lie strictly in (0, 1)")
    out = special.ndtri(arr)
    return out if arr.ndim else float(out)


def f_tail(F_stat, d1, d2):
    """Upper tail P(F_{d1,d2} > F_stat) via the regularized incomplete beta."""
    if not np.isfinite(F_stat) or F_stat < 0:
        raise NonFinite(f"F statistic must be finite and non-negative, got {F_stat}")
    if d1 < 1 or d2 < 1:
        raise OutOfRange("degrees of freedom must be >= 1")
    x = d2 / (d2 + d1 * F_stat)
    return float(special.betainc(d2 / 2.0, d1 / 2.0, x))
