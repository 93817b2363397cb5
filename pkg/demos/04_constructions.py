# %% [markdown]
# # Sets without long regular or convex subsequences

# %%
from regseq import build_cantor, build_density_example, build_difference_example
from regseq import difference_set, exact_convex, exact_r_l
from regseq.constructions import check_cantor_structure

cs = build_cantor(2, 4)
for lvl in cs.levels:
    print(f"level {lvl.index}: {len(lvl.starts)} intervals of length {lvl.length}, {lvl.size} points")
print("problems:", check_cantor_structure(cs))

# %%
A = build_density_example(2)
print(f"|A| = {len(A)} of 192, R_2 = {exact_r_l(A, 2).length}, C = {exact_convex(A).length}")

# %% [markdown]
# Lacunary sums: the difference set stays free of long 2-regular runs.

# %%
for n in range(1, 6):
    A = build_difference_example(n)
    D = difference_set(A)
    print(n, len(A), len(D), exact_r_l(D, 2).length, exact_convex(D).length)
