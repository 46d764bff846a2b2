"""
Building and checking a design
==============================

GDD(13, 6; 3, 5) cannot use the plain star construction because N has
even size.  The builder pulls one point out of M, builds a small design
around it, and serves N from cycles of 3K_12.  The verifier then counts
every pair from scratch.
"""

import numpy as np

from gdd3 import build, classify, verify_gdd

m, n, lam = 13, 6, 5
print("classification:", classify(m, n, lam))

design = build(m, n, lam, seed=0)
print(f"blocks: {len(design.blocks)} (expected {design.params.block_count})")

report = verify_gdd(design)
print("verifier:", report.summary())

# Pair multiplicities as a matrix: 3 inside each group, lambda across.
v = m + n
pairs = np.zeros((v, v), dtype=int)
for block in design.blocks:
    for i in range(3):
        for j in range(i + 1, 3):
            a, b = block[i], block[j]
            pairs[a, b] += 1
            pairs[b, a] += 1
print("distinct multiplicities inside M:", np.unique(pairs[:m, :m][~np.eye(m, dtype=bool)]))
print("distinct multiplicities inside N:", np.unique(pairs[m:, m:][~np.eye(n, dtype=bool)]))
print("distinct multiplicities across:", np.unique(pairs[:m, m:]))
