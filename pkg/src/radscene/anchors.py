"""Anchor point generation: Platonic vertex sets for p in {4, 6, 8, 12, 20},
golden-ratio (Fibonacci) spiral points on the sphere otherwise, and
equi-spaced circle anchors for 2D displays."""

import math
from dataclasses import dataclass

import numpy as np

from .errors import TooFewAnchors

GOLDEN_RATIO = (1.0 + math.sqrt(5.0)) / 2.0


@dataclass(frozen=True)
class AnchorSet:
    points: np.ndarray  # p x d, unit-norm rows
    scheme: str         # "platonic" | "fibonacci" | "circle"

    @property
    def p(self):
        return self.points.shape[0]

    @property
    def dim(self):
        return self.points.shape[1]


def _platonic_vertices(p):
    phi = GOLDEN_RATIO
    s3 = math.sqrt(3.0)
    if p == 4:  # tetrahedron
        rows = [(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)]
        return np.array(rows, dtype=float) / s3
    if p == 6:  # octahedron
        rows = [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]
        return np.array(rows, dtype=float)
    if p == 8:  # cube
        rows = [(sx, sy, sz) for sx in (1, -1) for sy in (1, -1) for sz in (1, -1)]
        return np.array(rows, dtype=float) / s3
    if p == 12:  # icosahedron
        norm = math.sqrt(1.0 + phi * phi)
        rows = []
        for a in (1.0, -1.0):
            for b in (phi, -phi):
                rows.append((0.0, a, b))
                rows.append((a, b, 0.0))
                rows.append((b, 0.0, a))
        return np.array(rows, dtype=float) / norm
    if p == 20:  # dodecahedron
        inv = 1.0 / phi
        rows = [(sx, sy, sz) for sx in (1, -1) for sy in (1, -1) for sz in (1, -1)]
        for a in (inv, -inv):
            for b in (phi, -phi):
                rows.append((0.0, a, b))
                rows.append((a, b, 0.0))
                rows.append((b, 0.0, a))
        return np.array(rows, dtype=float) / s3
    raise ValueError(p)


def fibonacci_sphere(p):
    """Golden-ratio spiral: z strides 2/p, longitude advances by 2*pi/phi."""
    j = np.arange(1, p + 1, dtype=float)
    z = (2.0 * j - 1.0) / p - 1.0
    r = np.sqrt(1.0 - z * z)
    theta = 2.0 * np.pi * j / GOLDEN_RATIO
    return np.column_stack((np.cos(theta) * r, np.sin(theta) * r, z))


def sphere_anchors(p):
    """p unit vectors on the sphere: exact Platonic sets when available."""
    if p < 4:
        raise TooFewAnchors(f"sphere anchors need p >= 4, got {p}")
    if p in (4, 6, 8, 12, 20):
        return AnchorSet(points=_platonic_vertices(p), scheme="platonic")
    return AnchorSet(points=fibonacci_sphere(p), scheme="fibonacci")


def circle_anchors(p):
    """p equi-spaced unit vectors on the circle."""
    if p < 3:
        raise TooFewAnchors(f"circle anchors need p >= 3, got {p}")
    j = np.arange(1, p + 1, dtype=float)
    ang = 2.0 * np.pi * j / p
    return AnchorSet(points=np.column_stack((np.cos(ang), np.sin(ang))),
                     scheme="circle")
