"""Acceptance suite: one test per exit criterion, each printing a pass line
with its measured margin. Run with `pytest tests/test_acceptance.py -s`."""

import json
import math
import time

import numpy as np
import pytest
from scipy.spatial.distance import pdist
from scipy.stats import norm

import radscene as rs
from radscene.anchors import fibonacci_sphere
from radscene.evalsim import DESK_SCALE_SEPARATIONS, desk_scale_spec
from radscene.gdt import benjamini_hochberg, uniform_randomizers
from radscene.pipeline import PipelineConfig, run_project

PLATONIC_P = (4, 6, 8, 12, 20)


def report(criterion, detail):
    print(f"PASS criterion {criterion}: {detail}")


def dot_multiset(points, decimals=9):
    p = len(points)
    return sorted(round(float(points[i] @ points[j]), decimals)
                  for i in range(p) for j in range(i + 1, p))


def reference_platonic(p):
    """Vertex lists typed independently from the solid definitions."""
    phi = (1 + math.sqrt(5)) / 2
    if p == 4:
        raw = [(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)]
        return np.array(raw) / math.sqrt(3)
    if p == 6:
        return np.array([(1, 0, 0), (-1, 0, 0), (0, 1, 0),
                         (0, -1, 0), (0, 0, 1), (0, 0, -1)], dtype=float)
    if p == 8:
        raw = [(a, b, c) for a in (1, -1) for b in (1, -1) for c in (1, -1)]
        return np.array(raw) / math.sqrt(3)
    if p == 12:
        raw = []
        for a in (1.0, -1.0):
            for b in (phi, -phi):
                raw += [(0, a, b), (a, b, 0), (b, 0, a)]
        return np.array(raw) / math.sqrt(1 + phi * phi)
    raw = [(a, b, c) for a in (1, -1) for b in (1, -1) for c in (1, -1)]
    for a in (1 / phi, -1 / phi):
        for b in (phi, -phi):
            raw += [(0, a, b), (a, b, 0), (b, 0, a)]
    return np.array(raw) / math.sqrt(3)


def test_criterion_01_platonic_geometry():
    start = time.perf_counter()
    for p in PLATONIC_P:
        pts = rs.sphere_anchors(p).points
        assert np.max(np.abs(np.linalg.norm(pts, axis=1) - 1)) <= 1e-12
        assert np.max(np.abs(pts.sum(axis=0))) <= 1e-12
        assert dot_multiset(pts) == dot_multiset(reference_platonic(p))
        if p == 4:
            assert all(d == pytest.approx(-1 / 3) for d in dot_multiset(pts))
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    report(1, f"Platonic sets for p in {PLATONIC_P} match vertex lists "
              f"({elapsed:.3f}s)")


def test_criterion_02_fibonacci_grid():
    start = time.perf_counter()
    worst = np.inf
    for p in range(5, 201):
        if p in PLATONIC_P:
            continue
        pts = fibonacci_sphere(p)
        assert np.max(np.abs(np.linalg.norm(pts, axis=1) - 1)) <= 1e-12
        margin = pdist(pts).min() * math.sqrt(p)
        worst = min(worst, margin)
        assert margin >= 1.0
    elapsed = time.perf_counter() - start
    assert elapsed < 5.0
    report(2, f"min chord * sqrt(p) >= {worst:.3f} for p in 5..200 "
              f"({elapsed:.3f}s)")


def test_criterion_03_distance_identity():
    start = time.perf_counter()
    worst = 0.0
    cases = [(rs.sphere_anchors(p), p) for p in range(4, 21)]
    cases += [(rs.circle_anchors(p), p) for p in range(3, 21)]
    for anchors, p in cases:
        for i, j in ((0, 1), (0, p - 1), (p // 2, p - 1)):
            if i == j:
                continue
            expected = 2 - 2 * anchors.points[i] @ anchors.points[j]
            for a in (0.3, 1.0, 7.0):
                for b in (0.3, 1.0, 7.0):
                    X = np.zeros((2, p))
                    X[0, i] = a
                    X[1, j] = b
                    pts = rs.gradviz_project(X, anchors)
                    err = abs(np.sum((pts[0] - pts[1]) ** 2) - expected)
                    worst = max(worst, err)
                    assert err <= 1e-12
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    report(3, f"one-hot squared distances match 2 - 2 u_i.u_j, max error "
              f"{worst:.2e} ({elapsed:.3f}s)")


def test_criterion_04_scale_invariance():
    rng = np.random.default_rng(2024)
    # mantissas limited to 20 bits so c*x is exact for the tested c
    data = rng.integers(0, 2 ** 20, size=(500, 8)).astype(float) / 2 ** 20
    labels = rng.integers(1, 4, size=500)
    base = rs.make_scene(data, labels, "radviz3d")
    for c in (0.5, 3.0, 1e6):
        scene = rs.make_scene(c * data, labels, "radviz3d")
        assert np.array_equal(base.points, scene.points)
    report(4, "scenes bit-identical under feature scaling c in {0.5, 3, 1e6}")


def test_criterion_05_procrustes():
    rng = np.random.default_rng(55)
    for trial in range(50):
        p = int(rng.integers(2, 31))
        q = int(rng.integers(1, min(p, 5) + 1))
        m = int(rng.integers(1, 6))
        Vs = [np.linalg.qr(rng.normal(size=(p, q)))[0] for _ in range(m)]
        W = rs.nearest_orthogonal(Vs)
        total = sum(Vs)
        sigma_sum = np.linalg.svd(total, compute_uv=False).sum()
        assert abs(np.trace(W.T @ total) - sigma_sum) <= 1e-8
        obj = sum(np.sum((W - V) ** 2) for V in Vs)
        for _ in range(1000):
            C = np.linalg.qr(rng.normal(size=(p, q)))[0]
            assert obj <= sum(np.sum((C - V) ** 2) for V in Vs) + 1e-9
    report(5, "trace identity within 1e-8 and optimal vs 1000 random "
              "candidates on 50 instances")


def test_criterion_06_mrp_contracts():
    rng = np.random.default_rng(66)
    for trial in range(50):
        G = int(rng.integers(2, 7))
        p = int(rng.integers(2, 41))
        n_per = int(rng.integers(max(3, p // G + 2), 500 // G + 1))
        means = rng.normal(scale=rng.uniform(0, 4), size=(G, p))
        X = np.vstack([rng.normal(size=(n_per, p)) + means[g] for g in range(G)])
        labels = np.repeat(np.arange(1, G + 1), n_per)
        model, _ = rs.mrp_fit(X, labels)
        Z = X @ model.pre_reduction
        pair = rs.sscp(Z, labels)
        M = model.directions.T @ pair.T @ model.directions
        off = np.max(np.abs(M - np.diag(np.diag(M))))
        assert off <= 1e-8 * np.max(np.abs(M))
        ev = model.eigenvalues
        assert np.all(ev >= 0) and np.all(ev <= 1 + 1e-10)
        assert np.sum(ev > 1e-10) <= G - 1
        lam1 = ev[0]
        for _ in range(1000):
            u = rng.normal(size=Z.shape[1])
            u /= np.linalg.norm(u)
            assert (u @ pair.B @ u) / (u @ pair.T @ u) <= lam1 + 1e-8
    report(6, "T-orthogonality, eigenvalue bounds and ratio optimality on "
              "50 random labeled datasets")


def test_criterion_07_gdt():
    start = time.perf_counter()
    rng = np.random.default_rng(77)
    n = 2000
    data = np.column_stack([
        rng.integers(0, 2, size=n).astype(float),
        rng.integers(0, 5, size=n).astype(float),
        rng.poisson(2.0, size=n).astype(float),
        rng.lognormal(0.0, 1.0, size=n),
        rng.exponential(1.0, size=n),
        rng.gamma(0.7, size=n),
    ])
    model = rs.fit_gdt(data, seed=314)
    out = rs.gdt_transform(model, data)

    ks_worst = 0.0
    grid = np.arange(1, n + 1) / n
    for i in range(6):
        z = np.sort(out[:, i])
        cdf = norm.cdf(z)
        ks = max(np.max(np.abs(cdf - grid)), np.max(np.abs(cdf - (grid - 1 / n))))
        ks_worst = max(ks_worst, ks)
        assert ks < 0.0364

    u = norm.cdf(out)
    for i in range(6):
        back = np.array([rs.inverse_check(model, u[j, i], i) for j in range(n)])
        assert np.array_equal(back, data[:, i])
    elapsed = time.perf_counter() - start
    assert elapsed < 5.0
    report(7, f"KS max {ks_worst:.4f} < 0.0364 and exact quantile round-trip "
              f"on all 12000 cells ({elapsed:.3f}s)")


def test_criterion_08_bh_oracle():
    rng = np.random.default_rng(88)
    for _ in range(10_000):
        m = int(rng.integers(1, 13))
        p = np.round(rng.uniform(size=m), 4)
        alpha = float(rng.uniform(0.01, 0.25))
        got = benjamini_hochberg(p, alpha)
        # brute force: largest k with p_(k) <= k*alpha/m
        order = np.argsort(p, kind="stable")
        k = 0
        for i in range(m):
            if p[order[i]] <= (i + 1) * alpha / m:
                k = i + 1
        want = np.zeros(m, dtype=bool)
        want[order[:k]] = True
        assert np.array_equal(got, want)
    report(8, "keep_mask equals brute-force BH on 10^4 random p-value vectors")


def run_desk_scale(mean_scale):
    spec = desk_scale_spec(mean_scale)
    overlap = rs.mc_overlap(spec, mc_samples=20_000)
    ds = rs.discretize_deciles(rs.simulate_mixture(spec), range(10))
    model = rs.fit_gdt(ds.values, seed=3, names=ds.names)
    X = rs.gdt_transform(model, ds.values)
    rep = rs.anova_screen(X, ds.labels, alpha=0.05)
    kept = X[:, rep.keep_mask] if rep.keep_mask.any() else X
    mrp_model, proj = rs.mrp_fit(kept, ds.labels)
    scene = rs.make_scene(proj, ds.labels, "radviz3d")
    return overlap.generalized_overlap, rs.separation_metric(scene), mrp_model.k


def test_criterion_09_desk_scale_reproduction():
    start = time.perf_counter()
    results = [run_desk_scale(s) for s in DESK_SCALE_SEPARATIONS]
    overlaps = [r[0] for r in results]
    seps = [r[1] for r in results]
    assert all(r[2] == 4 for r in results)
    assert overlaps[0] < overlaps[1] < overlaps[2]
    assert seps[0] - seps[1] >= 0.05
    assert seps[1] - seps[2] >= 0.05
    elapsed = time.perf_counter() - start
    assert elapsed < 30.0
    report(9, "overlap " + " < ".join(f"{o:.4f}" for o in overlaps)
           + " while separation " + " > ".join(f"{s:.3f}" for s in seps)
           + f" ({elapsed:.1f}s)")


def test_criterion_10_overlap_oracle():
    eye2 = np.broadcast_to(np.eye(2), (2, 2, 2)).copy()
    same = rs.MixtureSpec(means=np.zeros((2, 2)), covariances=eye2,
                          proportions=np.array([0.5, 0.5]), n=10, seed=1)
    r = rs.mc_overlap(same, mc_samples=100_000)
    assert abs(r.pairwise[0, 1] - 1.0) <= 0.02

    eye1 = np.broadcast_to(np.eye(1), (2, 1, 1)).copy()
    far = rs.MixtureSpec(means=np.array([[0.0], [10.0]]), covariances=eye1,
                         proportions=np.array([0.5, 0.5]), n=10, seed=2)
    r2 = rs.mc_overlap(far, mc_samples=100_000)
    assert r2.pairwise[0, 1] <= 0.001
    report(10, f"identical components: {r.pairwise[0, 1]:.4f} ~ 1; "
               f"10-sigma apart: {r2.pairwise[0, 1]:.2e} <= 0.001")


def test_criterion_11_numerics():
    rng = np.random.default_rng(111)
    for _ in range(50):
        m = int(rng.integers(1, 201))
        A = rng.normal(size=(m, m))
        A = (A + A.T) / 2
        res = rs.sym_eig(A)
        scale = 1 + np.max(np.abs(A))
        recon = res.eigenvectors @ np.diag(res.eigenvalues) @ res.eigenvectors.T
        assert np.max(np.abs(A - recon)) <= 1e-8 * scale
        assert np.max(np.abs(res.eigenvectors.T @ res.eigenvectors - np.eye(m))) <= 1e-10
    for _ in range(50):
        q = int(rng.integers(1, 201))
        p = int(rng.integers(q, 201))
        A = rng.normal(size=(p, q))
        res = rs.svd(A)
        recon = res.U @ np.diag(res.singular_values) @ res.V.T
        assert np.max(np.abs(A - recon)) <= 1e-8 * (1 + np.max(np.abs(A)))

    import mpmath
    for x in np.linspace(-6, 0, 61):
        u = float(mpmath.ncdf(x))
        assert abs(rs.norm_quantile(u) - x) < 1e-9  # upper tail by antisymmetry

    assert rs.f_tail(1.0, 1, 1) == pytest.approx(0.5, abs=1e-10)
    draws = rng.standard_normal((2, 10_000_000))
    mc = np.mean((draws[0] / draws[1]) ** 2 > 1.0)
    assert abs(rs.f_tail(1.0, 1, 1) - mc) < 1e-3
    report(11, f"100 reconstructions ok; quantile round-trip < 1e-9; "
               f"f_tail(1,1,1) = 0.5 vs MC {mc:.5f}")


def test_criterion_12_end_to_end_determinism(tmp_path):
    spec = desk_scale_spec(3.0)
    ds = rs.discretize_deciles(rs.simulate_mixture(spec), range(10))
    csv_path = tmp_path / "data.csv"
    lines = [",".join(list(ds.names) + ["group"])]
    for row, lab in zip(ds.values, ds.labels):
        lines.append(",".join(format(x, ".17g") for x in row) + f",{int(lab)}")
    csv_path.write_text("\n".join(lines) + "\n", encoding="utf-8")

    blobs = []
    for name in ("run1", "run2"):
        out = tmp_path / name
        config = PipelineConfig(input_path=str(csv_path), label_column="group",
                                seed=17, out_dir=str(out))
        paths = run_project(config)
        blobs.append({k: open(v, "rb").read() for k, v in paths.items()})
    assert blobs[0] == blobs[1]
    scene = json.loads(blobs[0]["scene"].decode("utf-8"))
    assert scene["metadata"]["seed"] == 17
    report(12, "two identical configs produced byte-identical scene JSON")
