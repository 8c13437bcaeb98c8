"""Gaussianized distributional transform and ANOVA/FDR feature screening.

Each feature gets an exact ECDF table (support, left CDF, jump). A value y
with a seeded uniform randomizer v maps to Phi^{-1}(F(y-) + v * jump(y)),
which is standard normal marginally even for discrete features. Screening
runs a one-way F test per transformed coordinate and keeps the
Benjamini-Hochberg rejection set.
"""

import json
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateGroup, NonFinite, ShapeMismatch, ValueOutsideSupport
from .numerics import f_tail, norm_quantile

_MASK = np.uint64(0xFFFFFFFFFFFFFFFF)


@dataclass(frozen=True)
class EcdfTable:
    support: np.ndarray   # sorted distinct observed values
    left_cdf: np.ndarray  # F(y-) at each support point
    jump: np.ndarray      # F(y) - F(y-) at each support point


@dataclass(frozen=True)
class GdtModel:
    tables: tuple          # p EcdfTables
    seed: int
    names: tuple

    @property
    def p(self):
        return len(self.tables)


@dataclass(frozen=True)
class ScreeningReport:
    f_stats: np.ndarray
    p_values: np.ndarray
    keep_mask: np.ndarray
    alpha: float


def fit_ecdf(column):
    column = np.asarray(column, dtype=float)
    if column.size == 0 or not np.all(np.isfinite(column)):
        raise NonFinite("ECDF column must be non-empty and finite")
    support, counts = np.unique(column, return_counts=True)
    jump = counts / column.size
    left_cdf = np.cumsum(jump) - jump
    return EcdfTable(support=support, left_cdf=left_cdf, jump=jump)


def fit_gdt(values, seed, names=None):
    values = np.asarray(values, dtype=float)
    p = values.shape[1]
    if names is None:
        names = tuple(f"f{i + 1}" for i in range(p))
    tables = tuple(fit_ecdf(values[:, i]) for i in range(p))
    return GdtModel(tables=tables, seed=int(seed), names=tuple(names))


def _splitmix64(x):
    x = (x + np.uint64(0x9E3779B97F4A7C15)) & _MASK
    x = ((x ^ (x >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)) & _MASK
    x = ((x ^ (x >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)) & _MASK
    return x ^ (x >> np.uint64(31))


def uniform_randomizers(seed, rows, cols):
    """Uniform(0,1) draws that are a pure function of (seed, row, col).

    Counter-based, so serial and parallel evaluation agree bit-for-bit and
    the draw for a cell never depends on evaluation order. Values lie in
    (0, 1) strictly.
    """
    rows = np.asarray(rows, dtype=np.uint64)
    cols = np.asarray(cols, dtype=np.uint64)
    with np.errstate(over="ignore"):
        h = _splitmix64(np.uint64(seed & 0xFFFFFFFFFFFFFFFF))
        h = _splitmix64(h ^ _splitmix64(rows + np.uint64(1)))
        h = _splitmix64(h ^ _splitmix64(cols + np.uint64(0x100000001)))
    return (h >> np.uint64(11)).astype(float) * 2.0 ** -53 + 2.0 ** -54


def gdt_transform(model, data):
    """Map an n x p table through the fitted generalized transform."""
    data = np.asarray(data, dtype=float)
    n, p = data.shape
    if p != model.p:
        raise ShapeMismatch(f"model has {model.p} features, data has {p}")
    out = np.empty((n, p), dtype=float)
    row_idx = np.arange(n)
    for i, table in enumerate(model.tables):
        col = data[:, i]
        pos = np.searchsorted(table.support, col)
        ok = (pos < table.support.size) & np.isfinite(col)
        ok &= table.support[np.minimum(pos, table.support.size - 1)] == col
        if not np.all(ok):
            bad = int(np.argmin(ok))
            raise ValueOutsideSupport(model.names[i], col[bad])
        v = uniform_randomizers(model.seed, row_idx, np.full(n, i))
        u = table.left_cdf[pos] + v * table.jump[pos]
        out[:, i] = norm_quantile(u)
    return out


def inverse_check(model, u, feature):
    """Generalized inverse F^{-1}(u) = inf{y : F(y) >= u} for one feature."""
    table = model.tables[feature]
    cdf = table.left_cdf + table.jump
    idx = np.searchsorted(cdf, u, side="left")
    idx = min(int(idx), table.support.size - 1)
    return float(table.support[idx])


def benjamini_hochberg(p_values, alpha):
    """Boolean rejection mask at FDR level alpha."""
    p_values = np.asarray(p_values, dtype=float)
    m = p_values.size
    order = np.argsort(p_values, kind="stable")
    sorted_p = p_values[order]
    thresholds = alpha * np.arange(1, m + 1) / m
    passing = np.nonzero(sorted_p <= thresholds)[0]
    mask = np.zeros(m, dtype=bool)
    if passing.size:
        k = passing[-1] + 1
        mask[order[:k]] = True
    return mask


def anova_screen(transformed, labels, alpha=0.05):
    """One-way ANOVA per coordinate with Benjamini-Hochberg control."""
    X = np.asarray(transformed, dtype=float)
    labels = np.asarray(labels, dtype=int)
    n, p = X.shape
    groups = np.unique(labels)
    G = groups.size
    if G < 2:
        raise DegenerateGroup("screening needs at least two groups")
    sizes = np.array([np.sum(labels == g) for g in groups])
    if np.any(sizes < 2):
        raise DegenerateGroup("every group needs at least two members")

    grand = X.mean(axis=0)
    ss_total = np.sum((X - grand) ** 2, axis=0)
    ss_group = np.zeros(p)
    for g, n_g in zip(groups, sizes):
        mg = X[labels == g].mean(axis=0)
        ss_group += n_g * (mg - grand) ** 2
    ss_within = np.maximum(ss_total - ss_group, 0.0)

    f_stats = np.zeros(p)
    p_values = np.ones(p)
    tiny = 1e-12 * (1.0 + ss_total)
    for j in range(p):
        if ss_within[j] <= tiny[j]:
            # zero within-group variance: decisive either way
            if ss_group[j] > tiny[j]:
                f_stats[j] = np.inf
                p_values[j] = 0.0
            else:
                f_stats[j] = 0.0
                p_values[j] = 1.0
        else:
            f_stats[j] = (ss_group[j] / (G - 1)) / (ss_within[j] / (n - G))
            p_values[j] = f_tail(f_stats[j], G - 1, n - G)
    keep_mask = benjamini_hochberg(p_values, alpha)
    return ScreeningReport(f_stats=f_stats, p_values=p_values,
                           keep_mask=keep_mask, alpha=float(alpha))


def model_to_json(model):
    doc = {
        "seed": model.seed,
        "features": [
            {
                "name": name,
                "support": table.support.tolist(),
                "left_cdf": table.left_cdf.tolist(),
                "jump": table.jump.tolist(),
            }
            for name, table in zip(model.names, model.tables)
        ],
    }
    return json.dumps(doc, indent=2)


def model_from_json(text):
    doc = json.loads(text)
    tables = []
    names = []
    for feat in doc["features"]:
        names.append(feat["name"])
        tables.append(EcdfTable(
            support=np.asarray(feat["support"], dtype=float),
            left_cdf=np.asarray(feat["left_cdf"], dtype=float),
            jump=np.asarray(feat["jump"], dtype=float),
        ))
    return GdtModel(tables=tuple(tables), seed=int(doc["seed"]), names=tuple(names))
