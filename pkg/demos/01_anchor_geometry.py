"""Anchor geometry tour.

For p in {4, 6, 8, 12, 20} the sphere anchors are Platonic-solid vertices
and exactly equi-spaced; for any other p a golden-ratio spiral gives an
approximately equi-spaced grid. This script prints, for a range of p, the
scheme chosen and the spread between the smallest and largest
nearest-neighbor chord.
"""

import numpy as np
from scipy.spatial.distance import pdist, squareform

from radscene import sphere_anchors

print(f"{'p':>4}  {'scheme':<10} {'min nn chord':>12} {'max nn chord':>12}")
for p in (4, 5, 6, 8, 12, 16, 20, 50, 100, 500):
    anchors = sphere_anchors(p)
    D = squareform(pdist(anchors.points))
    np.fill_diagonal(D, np.inf)
    nn = D.min(axis=1)
    print(f"{p:>4}  {anchors.scheme:<10} {nn.min():>12.6f} {nn.max():>12.6f}")

print()
print("Platonic sets are exactly equi-spaced (min == max); the Fibonacci")
print("grid keeps the minimum pairwise chord above 1/sqrt(p):")
for p in (5, 7, 30, 200):
    chord = pdist(sphere_anchors(p).points).min()
    print(f"  p = {p:>3}: min chord {chord:.4f} vs 1/sqrt(p) = {1 / np.sqrt(p):.4f}")
