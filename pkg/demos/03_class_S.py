# %% [markdown]
# # Which Turán graphs attain the floored bound?
#
# T(n, r) has exactly floor(n^2 (r-1) / 2r) edges iff s = n mod r
# satisfies s <= 2 or r(s-2) < s^2. The smallest exceptions have n = 12:
# T(12, 8) and T(12, 9).

# %%
from turan_local import classical_floor_bound, in_S, turan_edge_count

misses = [(n, r) for n in range(1, 21) for r in range(1, n + 1) if not in_S(n, r)]
print("Turán graphs outside S with n <= 20:", misses)
for n, r in misses[:3]:
    print(f"T({n},{r}): {turan_edge_count(n, r)} edges vs floor {classical_floor_bound(n, r)}")

# %%
from turan_local import classify_extremal, turan_graph

print(classify_extremal(turan_graph(7, 3)).to_dict())
print(classify_extremal(turan_graph(12, 9)).to_dict())
