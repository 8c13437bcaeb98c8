"""Simulation and evaluation harness: labeled Gaussian mixtures with
tunable separation, decile discretization of chosen coordinates, Monte
Carlo misclassification overlap between components, and a silhouette-based
separation score for projected scenes."""

import json
from dataclasses import dataclass

import numpy as np
from scipy.spatial.distance import cdist
from scipy.stats import multivariate_normal

from .errors import DegenerateGroup, NotPositiveDefinite, TooFewRecords
from .ingest import Dataset, FeatureKind


@dataclass(frozen=True)
class MixtureSpec:
    means: np.ndarray        # G x p
    covariances: np.ndarray  # G x p x p
    proportions: np.ndarray  # length G, sums to 1
    n: int
    seed: int

    def __post_init__(self):
        means = np.atleast_2d(np.asarray(self.means, dtype=float))
        covs = np.asarray(self.covariances, dtype=float)
        props = np.asarray(self.proportions, dtype=float)
        object.__setattr__(self, "means", means)
        object.__setattr__(self, "covariances", covs)
        object.__setattr__(self, "proportions", props)
        G, p = means.shape
        if covs.shape != (G, p, p):
            raise NotPositiveDefinite(
                f"covariances must be {G} x {p} x {p}, got {covs.shape}")
        if props.shape != (G,) or abs(props.sum() - 1.0) > 1e-9 or np.any(props < 0):
            raise NotPositiveDefinite("proportions must be non-negative and sum to 1")
        for g in range(G):
            C = covs[g]
            if np.max(np.abs(C - C.T)) > 1e-10 * (1.0 + np.max(np.abs(C))):
                raise NotPositiveDefinite(f"covariance {g + 1} is not symmetric")
            if np.min(np.linalg.eigvalsh((C + C.T) / 2.0)) <= 0:
                raise NotPositiveDefinite(f"covariance {g + 1} is not positive definite")

    @property
    def n_components(self):
        return self.means.shape[0]

    @property
    def p(self):
        return self.means.shape[1]


def spec_to_json(spec):
    doc = {
        "means": spec.means.tolist(),
        "covariances": spec.covariances.tolist(),
        "proportions": spec.proportions.tolist(),
        "n": spec.n,
        "seed": spec.seed,
    }
    return json.dumps(doc, indent=2)


def spec_from_json(text):
    doc = json.loads(text)
    means = np.atleast_2d(np.asarray(doc["means"], dtype=float))
    G, p = means.shape
    if "covariances" in doc:
        covs = np.asarray(doc["covariances"], dtype=float)
    else:
        covs = np.broadcast_to(np.eye(p), (G, p, p)).copy()
    props = np.asarray(doc.get("proportions", np.full(G, 1.0 / G)), dtype=float)
    return MixtureSpec(means=means, covariances=covs, proportions=props,
                       n=int(doc["n"]), seed=int(doc.get("seed", 0)))


def simulate_mixture(spec):
    """Draw a labeled Dataset from the mixture; every feature continuous."""
    rng = np.random.default_rng(spec.seed)
    G, p = spec.means.shape
    comps = rng.choice(G, size=spec.n, p=spec.proportions)
    chol = [np.linalg.cholesky(spec.covariances[g]) for g in range(G)]
    z = rng.standard_normal((spec.n, p))
    values = np.empty((spec.n, p))
    for g in range(G):
        sel = comps == g
        values[sel] = spec.means[g] + z[sel] @ chol[g].T
    # relabel to 1..G' by first appearance, so absent components leave no gap
    order = {}
    labels = np.empty(spec.n, dtype=int)
    for i, c in enumerate(comps):
        if c not in order:
            order[c] = len(order) + 1
        labels[i] = order[c]
    names = tuple(f"f{i + 1}" for i in range(p))
    kinds = (FeatureKind.CONTINUOUS,) * p
    return Dataset(values=values, labels=labels, kinds=kinds, names=names)


def discretize_deciles(dataset, columns):
    """Replace the chosen columns by their marginal decile bin index 1..10."""
    if dataset.n < 10:
        raise TooFewRecords("decile discretization needs at least 10 records")
    columns = list(columns)
    for c in columns:
        if c < 0 or c >= dataset.p:
            raise TooFewRecords(f"column index {c} out of range")
    values = dataset.values.copy()
    kinds = list(dataset.kinds)
    probs = np.arange(1, 10) / 10.0
    for c in columns:
        edges = np.quantile(values[:, c], probs)
        values[:, c] = np.searchsorted(edges, values[:, c], side="left") + 1.0
        kinds[c] = FeatureKind.DISCRETE
    return Dataset(values=values, labels=dataset.labels, kinds=kinds,
                   names=dataset.names)


def desk_scale_spec(mean_scale, n=500, p=20, n_groups=5, seed=11):
    """A G-component spherical-Gaussian spec whose means sit at mean_scale
    times fixed random unit directions; shrinking mean_scale raises overlap."""
    rng = np.random.default_rng(42)
    dirs = rng.normal(size=(n_groups, p))
    dirs /= np.linalg.norm(dirs, axis=1)[:, None]
    covs = np.broadcast_to(np.eye(p), (n_groups, p, p)).copy()
    return MixtureSpec(means=mean_scale * dirs, covariances=covs,
                       proportions=np.full(n_groups, 1.0 / n_groups),
                       n=n, seed=seed)


# mean scales giving low / medium / high overlap at the desk-scale defaults
DESK_SCALE_SEPARATIONS = (6.0, 3.0, 1.8)


@dataclass(frozen=True)
class OverlapMap:
    pairwise: np.ndarray      # G x G, symmetric, zero diagonal
    mc_samples: int
    generalized_overlap: float
    max_pairwise: float
    mean_pairwise: float


def mc_overlap(spec, mc_samples=100_000):
    """Pairwise misclassification overlaps by seeded Monte Carlo.

    Entry (i, j) estimates P(posterior favors j | X from i) plus the
    reverse term. The scalar summary is (lambda_max(pairwise + I) - 1)/(G - 1).
    """
    if mc_samples < 10_000:
        raise TooFewRecords("mc_overlap needs at least 1e4 samples")
    G, p = spec.means.shape
    dists = [multivariate_normal(mean=spec.means[g], cov=spec.covariances[g])
             for g in range(G)]
    log_props = np.log(np.where(spec.proportions > 0, spec.proportions, 1e-300))
    omega_cond = np.zeros((G, G))
    for i in range(G):
        rng = np.random.default_rng(np.random.SeedSequence((spec.seed, i)))
        X = dists[i].rvs(size=mc_samples, random_state=rng)
        lp = np.column_stack([dists[g].logpdf(X) + log_props[g] for g in range(G)])
        for j in range(G):
            if j != i:
                # ties (identical components) split evenly
                omega_cond[j, i] = np.mean((lp[:, j] > lp[:, i])
                                           + 0.5 * (lp[:, j] == lp[:, i]))
    pairwise = omega_cond + omega_cond.T
    np.fill_diagonal(pairwise, 0.0)
    if G > 1:
        lam = np.max(np.linalg.eigvalsh(pairwise + np.eye(G)))
        gen = float(np.clip((lam - 1.0) / (G - 1), 0.0, 1.0))
        off = pairwise[~np.eye(G, dtype=bool)]
        max_pw, mean_pw = float(off.max()), float(off.mean())
    else:
        gen = max_pw = mean_pw = 0.0
    return OverlapMap(pairwise=pairwise, mc_samples=int(mc_samples),
                      generalized_overlap=gen, max_pairwise=max_pw,
                      mean_pairwise=mean_pw)


def separation_metric(scene):
    """Mean silhouette coefficient of the scene points under their labels.

    The intra-group mean distance includes the point itself (always 0), so
    duplicating every point leaves the score unchanged; the classical
    n_g - 1 variant does not have that property.
    """
    points = np.asarray(scene.points, dtype=float)
    labels = np.asarray(scene.labels, dtype=int)
    groups = np.unique(labels)
    if groups.size < 2:
        raise DegenerateGroup("need at least two groups")
    sizes = np.array([np.sum(labels == g) for g in groups])
    if np.any(sizes < 2):
        raise DegenerateGroup("every group needs at least two points")
    D = cdist(points, points)
    n = points.shape[0]
    sil = np.empty(n)
    masks = {g: labels == g for g in groups}
    for i in range(n):
        own = masks[labels[i]]
        a = D[i, own].mean()
        b = min(D[i, masks[g]].mean() for g in groups if g != labels[i])
        denom = max(a, b)
        sil[i] = 0.0 if denom == 0.0 else (b - a) / denom
    return float(sil.mean())
