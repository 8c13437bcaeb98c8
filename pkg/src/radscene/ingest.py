"""Loading and validating labeled tabular datasets.

A Dataset is an immutable bundle of a finite numeric n x p table, integer
group labels re-encoded to 1..G in first-appearance order, and a
continuous/discrete kind per feature.
"""

import csv
import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import (EmptyDataset, MissingLabelColumn, NonNumericCell,
                     UnknownOverrideName)

DEFAULT_MAX_LEVELS = 10


class FeatureKind(enum.Enum):
    CONTINUOUS = "continuous"
    DISCRETE = "discrete"


@dataclass(frozen=True)
class Dataset:
    values: np.ndarray          # n x p, finite floats
    labels: np.ndarray          # length n, ints in 1..G
    kinds: tuple                # length p, FeatureKind
    names: tuple                # length p, feature names

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        labels = np.asarray(self.labels, dtype=int)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "kinds", tuple(self.kinds))
        object.__setattr__(self, "names", tuple(self.names))
        n, p = values.shape
        if n < 2 or p < 1:
            raise EmptyDataset(f"need n >= 2 and p >= 1, got {n} x {p}")
        if not np.all(np.isfinite(values)):
            raise _non_numeric_cell(values)
        if labels.shape != (n,):
            raise EmptyDataset("labels length must match the number of rows")
        groups = np.unique(labels)
        if groups[0] != 1 or groups[-1] != len(groups):
            raise EmptyDataset("labels must cover 1..G with every group present")
        if len(self.kinds) != p or len(self.names) != p:
            raise EmptyDataset("kinds and names must have one entry per feature")

    @property
    def n(self):
        return self.values.shape[0]

    @property
    def p(self):
        return self.values.shape[1]

    @property
    def n_groups(self):
        return int(self.labels.max())

    def group_sizes(self):
        return np.bincount(self.labels, minlength=self.n_groups + 1)[1:]


def _non_numeric_cell(values):
    bad = np.argwhere(~np.isfinite(values))[0]
    return NonNumericCell(int(bad[0]), int(bad[1]))


def infer_feature_kinds(values, max_levels=DEFAULT_MAX_LEVELS):
    """A feature is discrete iff it has at most max_levels distinct values."""
    values = np.asarray(values, dtype=float)
    if values.size == 0:
        raise EmptyDataset("cannot infer kinds from an empty table")
    kinds = []
    for j in range(values.shape[1]):
        n_distinct = np.unique(values[:, j]).size
        kinds.append(FeatureKind.DISCRETE if n_distinct <= max_levels
                     else FeatureKind.CONTINUOUS)
    return kinds


def encode_labels(raw_labels):
    """Map raw labels to 1..G by order of first appearance."""
    seen = {}
    out = np.empty(len(raw_labels), dtype=int)
    for i, lab in enumerate(raw_labels):
        if lab not in seen:
            seen[lab] = len(seen) + 1
        out[i] = seen[lab]
    return out, list(seen)


def load_csv(path, label_column, kind_overrides=None, max_levels=DEFAULT_MAX_LEVELS):
    """Load a labeled CSV (UTF-8, comma separated, header row, '.' decimals)."""
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise EmptyDataset(f"{path} is empty")
        rows = list(reader)
    if label_column not in header:
        raise MissingLabelColumn(f"label column {label_column!r} not in header {header}")
    if not rows:
        raise EmptyDataset(f"{path} has a header but no records")
    lab_idx = header.index(label_column)
    names = [name for i, name in enumerate(header) if i != lab_idx]

    raw_labels = []
    values = np.empty((len(rows), len(names)), dtype=float)
    for r, row in enumerate(rows):
        raw_labels.append(row[lab_idx] if lab_idx < len(row) else "")
        k = 0
        for c, name in enumerate(header):
            if c == lab_idx:
                continue
            cell = row[c] if c < len(row) else ""
            try:
                x = float(cell)
            except ValueError:
                raise NonNumericCell(r, name)
            if not math.isfinite(x):
                raise NonNumericCell(r, name)
            values[r, k] = x
            k += 1

    labels, _ = encode_labels(raw_labels)
    kinds = infer_feature_kinds(values, max_levels=max_levels)
    if kind_overrides:
        for name, kind in kind_overrides.items():
            if name not in names:
                raise UnknownOverrideName(f"override names unknown feature {name!r}")
            kinds[names.index(name)] = FeatureKind(kind) if not isinstance(kind, FeatureKind) else kind
    return Dataset(values=values, labels=labels, kinds=kinds, names=names)


def load_kind_overrides(path):
    """Read a sidecar overrides file with one `name,kind` pair per line."""
    overrides = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            name, _, kind = line.partition(",")
            try:
                overrides[name.strip()] = FeatureKind(kind.strip())
            except ValueError:
                raise UnknownOverrideName(f"bad kind in overrides line: {line!r}")
    return overrides
