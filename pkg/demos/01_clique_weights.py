# %% [markdown]
# # Clique weights
#
# Every vertex gets the order of the largest clique through it, c(v), and
# every edge the order of the largest clique through it, k(e). The
# paraglider X (complement of P2 + P3) is a good first example: its apex
# only sees edges, the other four vertices each sit in a triangle.

# %%
from turan_local import PARAGLIDER, edge_clique_weights, max_clique, vertex_clique_weights
from turan_local import oracle_vertex_weights

print("edges:", PARAGLIDER.edges())
print("omega and a witness:", max_clique(PARAGLIDER))
print("c(v):", vertex_clique_weights(PARAGLIDER))
print("k(e):", edge_clique_weights(PARAGLIDER))

# %% [markdown]
# The fast route (branch and bound on bitsets) and the brute-force subset
# oracle agree:

# %%
assert vertex_clique_weights(PARAGLIDER) == oracle_vertex_weights(PARAGLIDER)
