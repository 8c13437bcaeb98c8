"""Max-ratio projection of labeled data.

The fit has four stages: per-group principal directions of the
group-centered data, the nearest orthonormal-column matrix to those
per-group bases (a Procrustes mean), between/total SSCP matrices in the
reduced space, and the eigenproblem of T^{-1/2} B T^{-1/2} whose top
eigenvectors, mapped back through T^{-1/2} and normalized, maximize the
between-group to total sum-of-squares ratio under T-orthogonality.
"""

import json
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateGroup, ShapeMismatch, SingularReducedT, SingularT
from .numerics import svd, sym_eig

RANK_TOL = 1e-10


@dataclass(frozen=True)
class SscpPair:
    T: np.ndarray  # total corrected SSCP
    B: np.ndarray  # between-group SSCP


@dataclass(frozen=True)
class MrpModel:
    pre_reduction: np.ndarray  # p x q, orthonormal columns (identity if skipped)
    directions: np.ndarray     # q x k, unit-norm columns
    eigenvalues: np.ndarray    # length q, descending, in [0, 1]
    k: int


def sscp(data, labels):
    """Total corrected SSCP T and between-group SSCP B."""
    X = np.asarray(data, dtype=float)
    labels = np.asarray(labels, dtype=int)
    grand = X.mean(axis=0)
    Xc = X - grand
    T = Xc.T @ Xc
    B = np.zeros_like(T)
    for g in np.unique(labels):
        sel = labels == g
        d = X[sel].mean(axis=0) - grand
        B += sel.sum() * np.outer(d, d)
    return SscpPair(T=(T + T.T) / 2.0, B=(B + B.T) / 2.0)


def nearest_orthogonal(Vs):
    """Orthonormal-column matrix minimizing the summed squared Frobenius
    distance to the given orthonormal-column matrices."""
    if not Vs:
        raise ShapeMismatch("need at least one matrix")
    shape = Vs[0].shape
    for V in Vs:
        if V.shape != shape:
            raise ShapeMismatch(f"shape {V.shape} != {shape}")
    total = np.zeros(shape)
    for V in Vs:
        total = total + V
    res = svd(total)
    return res.U @ res.V.T


def max_ratio_directions(pair, k):
    """Top-k max-ratio directions and the full eigenvalue spectrum."""
    eig_T = sym_eig(pair.T)
    w = eig_T.eigenvalues
    if w[-1] <= RANK_TOL * max(w[0], 0.0) or w[0] <= 0:
        raise SingularT("total SSCP is singular; pre-reduce first")
    Q = eig_T.eigenvectors
    T_inv_half = Q @ np.diag(1.0 / np.sqrt(w)) @ Q.T
    M = T_inv_half @ pair.B @ T_inv_half
    eig_M = sym_eig((M + M.T) / 2.0)
    eigenvalues = np.clip(eig_M.eigenvalues, 0.0, None)
    dirs = T_inv_half @ eig_M.eigenvectors[:, :k]
    dirs = dirs / np.linalg.norm(dirs, axis=0)
    return dirs, eigenvalues


def _group_eigvec_matrices(X, labels, q):
    """Per-group top-q eigenvector matrices of the group-centered SSCPs."""
    out = []
    for g in np.unique(labels):
        Y = X[labels == g]
        Yc = Y - Y.mean(axis=0)
        S = Yc.T @ Yc
        eig = sym_eig((S + S.T) / 2.0)
        out.append(eig.eigenvectors[:, :q])
    return out


def choose_k(eigenvalues, n_groups, variance_mass=0.90, pad_to=4):
    """Retention policy: directions reaching the cumulative eigenvalue mass,
    capped at G-1, padded up to pad_to extra directions for small G."""
    ev = np.clip(np.asarray(eigenvalues, dtype=float), 0.0, None)
    q = ev.size
    total = ev.sum()
    if total <= 0:
        k_mass = 1
    else:
        k_mass = int(np.searchsorted(np.cumsum(ev) / total, variance_mass) + 1)
    k = min(k_mass, n_groups - 1)
    if n_groups <= 5:
        # a 3D radial display needs at least 4 anchors; the extra
        # directions carry (near) zero eigenvalues and pull all groups
        # equally, which is harmless
        k = max(k, pad_to)
    return max(1, min(k, q))


def mrp_fit(data, labels, variance_mass=0.90, k_override=None):
    """Fit the full max-ratio projection; returns (MrpModel, n x k table)."""
    X = np.asarray(data, dtype=float)
    labels = np.asarray(labels, dtype=int)
    n, p = X.shape
    groups = np.unique(labels)
    G = groups.size
    if G < 2:
        raise DegenerateGroup("need at least two groups")
    sizes = np.array([np.sum(labels == g) for g in groups])
    if np.any(sizes < 2):
        raise DegenerateGroup("every group needs at least two records")

    q = min(p, int(sizes.min()) - 1)
    if q >= p:
        W = np.eye(p)
    else:
        W = nearest_orthogonal(_group_eigvec_matrices(X, labels, q))
    Z = X @ W

    pair = sscp(Z, labels)
    try:
        dirs, eigenvalues = max_ratio_directions(pair, Z.shape[1])
    except SingularT:
        rank = int(np.sum(np.linalg.eigvalsh(pair.T)
                          > RANK_TOL * max(np.max(np.abs(pair.T)), 1.0)))
        raise SingularReducedT(rank, Z.shape[1])

    if k_override is not None:
        k = max(1, min(int(k_override), Z.shape[1]))
    else:
        k = choose_k(eigenvalues, G, variance_mass=variance_mass)
    model = MrpModel(pre_reduction=W, directions=dirs[:, :k],
                     eigenvalues=eigenvalues, k=k)
    return model, Z @ dirs[:, :k]


def model_to_json(model):
    doc = {
        "pre_reduction": model.pre_reduction.tolist(),
        "directions": model.directions.tolist(),
        "eigenvalues": model.eigenvalues.tolist(),
        "k": model.k,
    }
    return json.dumps(doc, indent=2)


def model_from_json(text):
    doc = json.loads(text)
    return MrpModel(
        pre_reduction=np.asarray(doc["pre_reduction"], dtype=float),
        directions=np.asarray(doc["directions"], dtype=float),
        eigenvalues=np.asarray(doc["eigenvalues"], dtype=float),
        k=int(doc["k"]),
    )
