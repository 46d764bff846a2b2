"""
Which GDD(m, n; 3, lambda) can exist?
=====================================

Three arithmetic conditions rule most parameter triples out.  Whatever
survives is either covered by one of the constructions or left open.
This script tabulates the landscape for small groups.
"""

import numpy as np

from gdd3 import Verdict, check_necessary, classify, lambda_max, residue_constraint

# The divisibility and parity conditions only depend on residues mod 6.
print("allowed lambda, by (m mod 6, n mod 6):")
for a in range(6):
    print("  ", " | ".join(f"{residue_constraint(a, b).value:>16}" for b in range(6)))

# lambda_max: the largest lambda the counting bound still allows.
M = 16
top = np.zeros((M + 1, M + 1), dtype=int)
for m in range(2, M + 1):
    for n in range(1, m):
        top[m, n] = lambda_max(m, n) or 0
print("\nlambda_max(m, n) for n < m <= 16 (rows m, columns n):")
print(top[2:, 1:M])

# Now count verdicts over every feasible triple.
counts = {v: 0 for v in Verdict}
open_cases = []
for m in range(2, 22):
    for n in range(1, m):
        for lam in range(4, (lambda_max(m, n) or 0) + 1):
            if check_necessary(m, n, lam):
                continue
            c = classify(m, n, lam)
            counts[c.verdict] += 1
            if c.verdict is Verdict.OPEN:
                open_cases.append((m, n, lam, c.open_tag.value))
print("\nverdicts for n < m <= 21:", {v.value: k for v, k in counts.items()})
print("first few open cases:")
for row in open_cases[:8]:
    print("  ", row)
