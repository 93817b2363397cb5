# %% [markdown]
# # Monochromatic regular subsequences
# Every r-colouring of a long enough interval has a long 2-regular colour class
# subsequence; the recursive block construction shows this is close to sharp.

# %%
import numpy as np

from regseq import Colouring, build_colouring, colouring_extract, exact_convex, exact_r_l
from regseq.extractors import colouring_bound

rng = np.random.default_rng(1)
N, r = 3**6, 2
c = Colouring(N, r, rng.integers(1, r + 1, N))
colour, res = colouring_extract(c)
print(f"colour {colour}: {len(res)} terms, guaranteed {colouring_bound(N, r)}")
print("first terms", list(res.sequence[:8]))
for step in res.trace:
    print(" ", step.kind, step.params)

# %% [markdown]
# Block colouring of [M^r]: each class stays short.

# %%
for M in (4, 8, 12):
    bc = build_colouring(2, M)
    worst = max(exact_r_l(cls, 2).length for cls in bc.classes() if cls)
    worst_c = max(exact_convex(cls).length for cls in bc.classes() if cls)
    print(f"M={M}: max R_2 {worst} (cap {2 * M}), max C {worst_c} (cap {2 * M})")
