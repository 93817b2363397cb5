# %% [markdown]
# # Exact solvers
# Longest L-regular and convex subsequences of small sets, checked against brute force.

# %%
import numpy as np

from regseq import brute_convex, brute_r_l, exact_convex, exact_r_l

rng = np.random.default_rng(0)
A = sorted(rng.choice(60, 15, replace=False).tolist())
print("A =", A)

# %%
for L in (1, 2, 3):
    res = exact_r_l(A, L)
    print(f"R_{L}(A) = {res.length}: {list(res.subsequence)}  witness {res.witness}")
    assert res.length == brute_r_l(A, L).length

# %%
res = exact_convex(A)
print(f"C(A) = {res.length}: {list(res.subsequence)}")
assert res.length == brute_convex(A).length

# %% [markdown]
# Long intervals: a convex subsequence of [1, n] has length about sqrt(2n).

# %%
for n in (10, 100, 1000, 5000):
    print(n, exact_convex(range(1, n + 1)).length, round((2 * n) ** 0.5, 1))
