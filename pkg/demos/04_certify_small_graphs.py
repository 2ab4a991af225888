# %% [markdown]
# # Certifying the theorems on every small graph
#
# The driver enumerates one graph per isomorphism class up to 8 vertices
# and checks each inequality together with its equality characterization.

# %%
import time

from turan_local import verify_theorems

start = time.perf_counter()
report = verify_theorems(8)
print(f"{sum(report.graphs_checked.values())} graphs in {time.perf_counter() - start:.1f}s, passed={report.passed}")
for n in report.n_range:
    print(n, report.graphs_checked[n], "extremal:", report.extremal_found[n])

# %% [markdown]
# At n = 5 the extremal set is T(5,1..5) plus the paraglider; at n = 3 it
# is every graph, Y included.
