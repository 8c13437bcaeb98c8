"""radscene: 3D radial-visualization scenes for labeled mixed-feature data.

Pipeline: Gaussianize each feature through its empirical CDF, screen
coordinates by one-way ANOVA with false-discovery control, reduce with
max-ratio projections, and radially project onto (approximately)
equi-spaced sphere anchors.
"""

from .anchors import AnchorSet, circle_anchors, fibonacci_sphere, sphere_anchors
from .errors import RadSceneError
from .evalsim import (MixtureSpec, OverlapMap, discretize_deciles, mc_overlap,
                      separation_metric, simulate_mixture)
from .gdt import (GdtModel, ScreeningReport, anova_screen, benjamini_hochberg,
                  fit_ecdf, fit_gdt, gdt_transform, inverse_check)
from .ingest import Dataset, FeatureKind, infer_feature_kinds, load_csv
from .mrp import MrpModel, SscpPair, max_ratio_directions, mrp_fit, \
    nearest_orthogonal, sscp
from .numerics import f_tail, norm_quantile, svd, sym_eig
from .pipeline import PipelineConfig, run_project
from .radviz import Scene, gradviz_project, make_scene, minmax_scale

__version__ = "0.1.0"
