"""Constants of the long-memory model and how fast the window variance settles.

Run with ``python demos/01_constants_and_variance.py``.
"""
# %%
import numpy as np

from ldcluster import asymptotic_diagnostics, build_coefficients, derive_constants, pickard_integral_check, sigma_n2

# %% [markdown]
# For coefficients ``a_i ~ i^-alpha`` the window sum ``S_n`` has variance
# growing like ``C_alpha n^(3 - 2 alpha)``, and the clusters of large
# window averages last about ``n^beta`` steps.

# %%
for alpha in (0.6, 0.75, 0.9):
    c = derive_constants(alpha)
    quad, closed = pickard_integral_check(c.H)
    print(
        f"alpha={alpha}: beta={c.beta:.4f} H={c.H:.2f} kappa={c.kappa} C_alpha={c.C_alpha:.6f} "
        f"kernel integral {quad:.10f} vs closed form {closed:.10f}"
    )

# %% [markdown]
# The exact window variance against its large-``n`` equivalent.

# %%
c = derive_constants(0.75)
for n in (100, 1000, 10_000):
    table = build_coefficients(0.75, 50 * n, n + int(n**c.beta) + 2)
    value, tail = sigma_n2(table, n)
    d = asymptotic_diagnostics(table, n, 1.0)
    ratios = " ".join(f"{k}={v:.4f}" for k, v in d.core_ratios().items())
    print(f"n={n:>6}: sigma_n^2={value:.4e} tail bound/value={tail / value:.4f} | {ratios}")

# %% [markdown]
# The correlation ratio approaches 1 slowest; it governs how quickly
# ``S_n(j)`` decorrelates from ``S_n(0)`` on the ``n^beta`` scale.

# %%
n = 4000
table = build_coefficients(0.75, 50 * n, n + 4 * int(n**c.beta) + 8)
for t in (0.25, 0.5, 1.0, 2.0, 4.0):
    d = asymptotic_diagnostics(table, n, t)
    print(f"t={t:4}: lag {d.shift:5d} correlation ratio {d.correlation_ratio:.4f}")
