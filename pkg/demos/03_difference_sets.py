# %% [markdown]
# # Regular subsequences of difference sets
# Dense sets: Ruzsa covering then colouring. Sparse sets: fiber descent.

# %%
from fractions import Fraction

import numpy as np

from regseq import check_regular, dense_diff_extract, ruzsa_cover, sparse_diff_extract

rng = np.random.default_rng(2)
N = 729
A = sorted((rng.choice(N, 400, replace=False) + 1).tolist())
T = ruzsa_cover(A, N)
print(f"|A| = {len(A)}, {len(T.translates)} translates cover [N]")

# %%
res = dense_diff_extract(A, N)
print(f"{len(res)} differences, 2-regular: {check_regular(res.sequence, 2)}")
pairs = res.witness_pairs()
d = res.sequence[0]
print(f"{d} = {pairs[d][0]} - {pairs[d][1]}")

# %% [markdown]
# A sparse set: density 1/16 in [4096].

# %%
N = 4096
A = sorted((rng.choice(N, N // 16, replace=False) + 1).tolist())
res = sparse_diff_extract(A, N, Fraction(1, 16))
print(f"{len(res)} differences; steps:", [s.kind for s in res.trace if s.kind != "lift"])
