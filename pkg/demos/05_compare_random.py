# %% [markdown]
# # Localized vs classical bound on random graphs
#
# For G(n, p) samples the localized floor never exceeds the classical
# floor taken at r = omega(G); this shows how much it gains.

# %%
import statistics

from turan_local.cli import compare_rows

rows = compare_rows(n=12, p=0.5, count=200, seed=0)
gain = [r["classical_gap"] for r in rows]
print("classical floor minus localized floor: mean", statistics.mean(gain), "max", max(gain))
print("localized floor minus m: median", statistics.median(r["vertex_gap"] for r in rows))
