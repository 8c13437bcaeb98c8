"""End-to-end pipeline: ingest -> Gaussianize -> screen -> max-ratio
projection -> minmax -> radial projection, with reproducible file outputs."""

import hashlib
import json
import warnings
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import gdt, mrp
from .ingest import FeatureKind, load_csv
from .radviz import make_scene, scene_anchors_csv, scene_points_csv, scene_to_json


@dataclass(frozen=True)
class PipelineConfig:
    input_path: str
    label_column: str
    seed: int = 0
    fdr_alpha: float = 0.05
    variance_mass: float = 0.90
    method: str = "radviz3d"
    screening: str = "auto"     # auto | on | off
    k: int = None
    out_dir: str = "."
    kind_overrides: dict = field(default_factory=dict)

    def canonical(self):
        return {
            "input_path": str(self.input_path),
            "label_column": self.label_column,
            "seed": self.seed,
            "fdr_alpha": self.fdr_alpha,
            "variance_mass": self.variance_mass,
            "method": self.method,
            "screening": self.screening,
            "k": self.k,
            "kind_overrides": {k: getattr(v, "value", v)
                               for k, v in sorted(self.kind_overrides.items())},
        }

    def digest(self):
        blob = json.dumps(self.canonical(), sort_keys=True).encode("utf-8")
        return hashlib.sha256(blob).hexdigest()[:16]


def run_project(config):
    """Run the full pipeline and write scene + report files.

    Returns a dict of output paths. Outputs are byte-identical across runs
    with the same config and input bytes.
    """
    out_dir = Path(config.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    caught = []

    dataset = load_csv(config.input_path, config.label_column,
                       kind_overrides=config.kind_overrides or None)

    model = gdt.fit_gdt(dataset.values, config.seed, names=dataset.names)
    transformed = gdt.gdt_transform(model, dataset.values)

    any_discrete = any(k is FeatureKind.DISCRETE for k in dataset.kinds)
    screen_on = (config.screening == "on"
                 or (config.screening == "auto" and any_discrete))
    report = None
    kept_names = list(dataset.names)
    X = transformed
    if screen_on:
        report = gdt.anova_screen(transformed, dataset.labels,
                                  alpha=config.fdr_alpha)
        if report.keep_mask.any():
            X = transformed[:, report.keep_mask]
            kept_names = [n for n, keep in zip(dataset.names, report.keep_mask)
                          if keep]
        else:
            caught.append("screening rejected every feature; keeping all")

    mrp_model, projected = mrp.mrp_fit(X, dataset.labels,
                                       variance_mass=config.variance_mass,
                                       k_override=config.k)

    metadata = {
        "seed": config.seed,
        "config_hash": config.digest(),
        "method": config.method,
        "screening": "on" if screen_on else "off",
        "k": mrp_model.k,
        "stages": ["ingest", "gdt", "screen" if screen_on else "no-screen",
                   "mrp", "minmax", "project"],
    }
    anchor_names = tuple(f"MRP{i + 1}" for i in range(mrp_model.k))
    with warnings.catch_warnings(record=True) as wlist:
        warnings.simplefilter("always")
        scene = make_scene(projected, dataset.labels, config.method,
                           anchor_names=anchor_names, metadata=metadata)
    caught.extend(str(w.message) for w in wlist)

    n_nonzero = int(np.sum(mrp_model.eigenvalues > 1e-10))
    run_report = {
        "config": config.canonical(),
        "config_hash": config.digest(),
        "n": dataset.n,
        "p": dataset.p,
        "n_groups": dataset.n_groups,
        "screening": None if report is None else {
            "alpha": report.alpha,
            "f_stats": [None if not np.isfinite(f) else float(f)
                        for f in report.f_stats],
            "p_values": report.p_values.tolist(),
            "keep_mask": report.keep_mask.tolist(),
            "n_dropped": int((~report.keep_mask).sum()),
        },
        "kept_features": kept_names,
        "eigenvalues": mrp_model.eigenvalues.tolist(),
        "k": mrp_model.k,
        "n_informative_directions": n_nonzero,
        "n_padded_directions": max(0, mrp_model.k - n_nonzero),
        "warnings": caught,
    }

    paths = {
        "scene": out_dir / "scene.json",
        "points": out_dir / "points.csv",
        "anchors": out_dir / "anchors.csv",
        "report": out_dir / "run_report.json",
    }
    paths["scene"].write_text(scene_to_json(scene), encoding="utf-8")
    paths["points"].write_text(scene_points_csv(scene), encoding="utf-8")
    paths["anchors"].write_text(scene_anchors_csv(scene), encoding="utf-8")
    paths["report"].write_text(json.dumps(run_report, indent=2, sort_keys=True),
                               encoding="utf-8")
    return {k: str(v) for k, v in paths.items()}
