# %% [markdown]
# # The vertex-localized bound
#
# m <= floor((n/2) * sum_v (c(v) - 1) / c(v)). All values are exact
# fractions; a report bundles it with the classical and edge-localized
# bounds.

# %%
from turan_local import PARAGLIDER, Y_GRAPH, bound_report, turan_graph
from turan_local.graph import cycle_graph

for name, G in [("X", PARAGLIDER), ("Y", Y_GRAPH), ("C5", cycle_graph(5)), ("T(12,9)", turan_graph(12, 9))]:
    rep = bound_report(G)
    print(f"{name:8} m={rep.m:3}  exact={rep.vertex_local_exact!s:>7}  floor={rep.vertex_local_floor:3}  "
          f"classical floor={rep.classical_floor:3}  tight={rep.tight_vertex_floor}")

# %% [markdown]
# X and Y meet the localized bound exactly but stay below the classical
# floor for their clique number; T(12,9) is a Turán graph that misses
# both by one.
