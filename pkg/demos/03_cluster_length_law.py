"""The rescaled cluster length against the fBM hitting-time limit.

A reduced version of the ``ldcluster verify`` pipeline that finishes in a
few minutes.  Run with ``python demos/03_cluster_length_law.py``.
"""
# %%
from ldcluster import experiment as ex
from ldcluster.analysis import ks_distance

# %%
cfg = ex.load_config(
    {
        "model": {"n": [250, 1000]},
        "sampler": {"in_event_target": 1500, "batch_size": 500, "max_replicas": 6000},
        "fbm": {"N": 3000, "dt": 2.0**-8},
        "run": {"seed": 7},
    }
)

# %% [markdown]
# The hitting time of the shifted polynomial barrier by fractional
# Brownian motion with ``H = 3/2 - alpha``.

# %%
tau_report = ex.run_tau_law(cfg)
tau = tau_report.laws["tau"]
print("tau quantiles:", {q: round(v, 3) for q, v in tau_report.data["tau"]["quantiles"].items()})

# %% [markdown]
# The first shift at which the window average drops below ``epsilon``,
# measured in units of ``n^beta``, conditioned on the event at time 0.

# %%
report = ex.run_verify(cfg, tau=tau)
for row in report.data["per_n"]:
    q = row["In_scaled"]["quantiles"]
    print(
        f"n={row['n']:>5}: KS to tau {row['ks_In_tau']:.3f}, W1 {row['w1_In_tau']:.3f}, "
        f"median {q['0.5']:.3f} (tau median {tau.quantile(0.5):.3f}), censored {row['censored_fraction']:.3f}"
    )
print("flags:", report.data["flags"])
print("KS between the two rungs:", round(ks_distance(report.laws["In_scaled_n250"], report.laws["In_scaled_n1000"]), 3))
