"""Gaussianizing mixed features and screening uninformative ones.

A distributional transform pushes each feature through its empirical CDF
(with a seeded uniform randomizer spreading ties of discrete values) and
then through the normal quantile, so every marginal is approximately
standard normal regardless of skew or discreteness. One-way ANOVA with
Benjamini-Hochberg false-discovery control then drops features that carry
no group signal.
"""

import numpy as np
from scipy.stats import kstest, norm

from radscene import anova_screen, fit_gdt, gdt_transform, inverse_check

rng = np.random.default_rng(5)
n = 1500
labels = np.repeat([1, 2, 3], n // 3)

# two informative features (one discrete, one skewed), two pure noise
data = np.column_stack([
    rng.poisson(1.0 + labels, size=n).astype(float),   # discrete, informative
    rng.lognormal(0.3 * labels, 1.0, size=n),          # skewed, informative
    rng.integers(0, 3, size=n).astype(float),          # discrete noise
    rng.exponential(2.0, size=n),                      # skewed noise
])
names = ("poisson_signal", "lognormal_signal", "discrete_noise", "skew_noise")

model = fit_gdt(data, seed=99, names=names)
z = gdt_transform(model, data)

print("KS distance of each transformed marginal vs the standard normal:")
for j, name in enumerate(names):
    print(f"  {name:<18} {kstest(z[:, j], 'norm').statistic:.4f}")

# the transform is invertible: pushing the uniformized value back through
# the empirical quantile function recovers the original cell exactly
u = norm.cdf(z[:, 0])
back = np.array([inverse_check(model, ui, 0) for ui in u])
print(f"\nexact reconstruction of the first column: {np.array_equal(back, data[:, 0])}")

report = anova_screen(z, labels, alpha=0.05)
print("\nANOVA screen at FDR 0.05:")
for name, f, p, keep in zip(names, report.f_stats, report.p_values,
                            report.keep_mask):
    print(f"  {name:<18} F = {f:>8.2f}  p = {p:.2e}  keep = {keep}")
