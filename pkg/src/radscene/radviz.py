"""Minmax scaling and the normalized radial projection onto an anchor set.

The projection sends a non-negative record x to (sum_j x_j u_j) / (sum_j x_j),
a convex combination of the unit anchors, so every point lands inside the
closed unit ball. Scenes bundle the projected points with labels, anchors
and metadata and serialize to JSON/CSV with a fixed field order.
"""

import json
import warnings
from dataclasses import dataclass, field

import numpy as np

from .anchors import AnchorSet, circle_anchors, sphere_anchors
from .errors import AnchorDimensionMismatch, TooFewCoordinates

METHODS = ("radviz3d", "radviz2d", "viz3d")


@dataclass(frozen=True)
class MinMaxParams:
    minima: np.ndarray
    maxima: np.ndarray

    @property
    def constant_mask(self):
        return self.maxima == self.minima


@dataclass(frozen=True)
class Scene:
    points: np.ndarray      # n x d
    labels: np.ndarray      # length n
    anchors: AnchorSet
    anchor_names: tuple
    method: str
    metadata: dict = field(default_factory=dict)


def minmax_scale(data):
    """Scale each feature to [0, 1]; constant features map to 0.5."""
    X = np.asarray(data, dtype=float)
    minima = X.min(axis=0)
    maxima = X.max(axis=0)
    span = maxima - minima
    scaled = np.empty_like(X)
    for j in range(X.shape[1]):
        if span[j] == 0.0:
            scaled[:, j] = 0.5
        else:
            scaled[:, j] = (X[:, j] - minima[j]) / span[j]
    return scaled, MinMaxParams(minima=minima, maxima=maxima)


def gradviz_project(scaled, anchors):
    """Normalized radial projection of non-negative records onto the anchors.

    The map is invariant to positive rescaling of a record; in the pipeline
    the input is minmax-scaled, but any non-negative table is accepted.
    """
    X = np.asarray(scaled, dtype=float)
    if X.shape[1] != anchors.p:
        raise AnchorDimensionMismatch(
            f"{anchors.p} anchors for {X.shape[1]} coordinates")
    if X.min() < -1e-12:
        raise AnchorDimensionMismatch("entries must be non-negative")
    sums = X.sum(axis=1)
    zero = sums == 0.0
    if np.any(zero):
        warnings.warn(f"{int(zero.sum())} all-zero record(s) mapped to the origin")
    safe = np.where(zero, 1.0, sums)
    return (X @ anchors.points) / safe[:, None]


def make_scene(data, labels, method, anchor_names=None, metadata=None):
    """Minmax-scale then radially project; returns a Scene."""
    X = np.asarray(data, dtype=float)
    labels = np.asarray(labels, dtype=int)
    k = X.shape[1]
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    if method == "radviz3d" and k < 4:
        raise TooFewCoordinates(f"radviz3d needs >= 4 coordinates, got {k}")
    if method in ("radviz2d", "viz3d") and k < 3:
        raise TooFewCoordinates(f"{method} needs >= 3 coordinates, got {k}")

    scaled, _ = minmax_scale(X)
    if method == "radviz3d":
        anchors = sphere_anchors(k)
        points = gradviz_project(scaled, anchors)
    else:
        anchors = circle_anchors(k)
        xy = gradviz_project(scaled, anchors)
        if method == "viz3d":
            points = np.column_stack((xy, scaled.mean(axis=1)))
        else:
            points = xy
    if anchor_names is None:
        anchor_names = tuple(f"c{i + 1}" for i in range(k))
    return Scene(points=points, labels=labels, anchors=anchors,
                 anchor_names=tuple(anchor_names), method=method,
                 metadata=dict(metadata or {}))


# --- serialization ----------------------------------------------------------

def _fmt(x):
    """17 significant digits: bit-stable float round trips."""
    return format(float(x), ".17g")


def _json_value(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return _fmt(v)
    if isinstance(v, str):
        return json.dumps(v)
    if isinstance(v, (list, tuple, np.ndarray)):
        return "[" + ", ".join(_json_value(x) for x in v) + "]"
    if isinstance(v, dict):
        inner = ", ".join(f"{_json_value(str(k))}: {_json_value(val)}"
                          for k, val in v.items())
        return "{" + inner + "}"
    if v is None:
        return "null"
    raise TypeError(f"cannot serialize {type(v)}")


def _anchor_row(name, row):
    x, y = row[0], row[1]
    z = row[2] if len(row) > 2 else 0.0
    return {"name": name, "x": float(x), "y": float(y), "z": float(z)}


def _point_row(row, label):
    x, y = row[0], row[1]
    z = row[2] if len(row) > 2 else 0.0
    return {"x": float(x), "y": float(y), "z": float(z), "label": int(label)}


def scene_to_json(scene):
    doc = {
        "method": scene.method,
        "anchors": [_anchor_row(n, r)
                    for n, r in zip(scene.anchor_names, scene.anchors.points)],
        "points": [_point_row(r, lab)
                   for r, lab in zip(scene.points, scene.labels)],
        "metadata": scene.metadata,
    }
    return _json_value(doc)


def scene_points_csv(scene):
    lines = ["x,y,z,label"]
    for row, lab in zip(scene.points, scene.labels):
        z = row[2] if len(row) > 2 else 0.0
        lines.append(f"{_fmt(row[0])},{_fmt(row[1])},{_fmt(z)},{int(lab)}")
    return "\n".join(lines) + "\n"


def scene_anchors_csv(scene):
    lines = ["name,x,y,z"]
    for name, row in zip(scene.anchor_names, scene.anchors.points):
        z = row[2] if len(row) > 2 else 0.0
        lines.append(f"{name},{_fmt(row[0])},{_fmt(row[1])},{_fmt(z)}")
    return "\n".join(lines) + "\n"
