"""Independent certification of designs and decompositions.

Nothing here reuses builder code: every check recomputes pair or edge
multiplicities from the raw blocks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

import numpy as np

from .design import GddDesign, GroupedPointSet
from .feasibility import DesignParams


class MalformedBlock(ValueError):
    pass


class MalformedComponent(ValueError):
    pass


@dataclass
class VerificationReport:
    ok: bool
    pair_counts: dict = field(repr=False)
    violations: list  # (pair, expected, observed)
    block_count_expected: int | Fraction
    block_count_observed: int

    def summary(self) -> str:
        head = "OK" if self.ok else f"FAILED ({len(self.violations)} violations)"
        return (
            f"{head}; blocks {self.block_count_observed} "
            f"(expected {self.block_count_expected})"
        )


def _report(points, counts: np.ndarray, expected: np.ndarray, n_expected, n_observed):
    pair_counts = {}
    violations = []
    for i, j in combinations(range(len(points)), 2):
        pair = (points[i], points[j])
        obs = int(counts[i, j])
        pair_counts[pair] = obs
        if obs != expected[i, j]:
            violations.append((pair, int(expected[i, j]), obs))
    ok = not violations and n_expected == n_observed
    return VerificationReport(ok, pair_counts, violations, n_expected, n_observed)


def verify_gdd(d: GddDesign) -> VerificationReport:
    """Count every pair over all blocks: 3 inside a group, lambda across."""
    M, N = d.points.M, d.points.N
    points = sorted(M) + sorted(N)
    index = {x: i for i, x in enumerate(points)}
    counts = np.zeros((len(points), len(points)), dtype=np.int64)
    for block in d.blocks:
        if len(block) != 3 or len(set(block)) != 3:
            raise MalformedBlock(f"block {block!r} is not a 3-subset")
        try:
            idx = sorted(index[x] for x in block)
        except KeyError as exc:
            raise MalformedBlock(f"block {block!r} uses unknown point {exc.args[0]!r}") from None
        for a, b in combinations(idx, 2):
            counts[a, b] += 1
    in_m = np.zeros(len(points), dtype=bool)
    in_m[: len(M)] = True
    same = in_m[:, None] == in_m[None, :]
    expected = np.where(same, d.params.lambda1, d.params.lambda2)
    m, n, lam = len(M), len(N), d.params.lambda2
    n_expected = Fraction(3 * m * (m - 1) + 3 * n * (n - 1) + 2 * lam * m * n, 6)
    if n_expected.denominator == 1:
        n_expected = int(n_expected)
    return _report(points, counts, expected, n_expected, len(d.blocks))


def verify_decomposition(v: int, dec) -> VerificationReport:
    """Check that cycles, optional 1-factor and triangles partition E(K_v)."""
    counts = np.zeros((v, v), dtype=np.int64)

    def add(x, y):
        if not (0 <= x < v and 0 <= y < v) or x == y:
            raise MalformedComponent(f"edge {(x, y)} is not an edge of K_{v}")
        a, b = (x, y) if x < y else (y, x)
        counts[a, b] += 1

    for cyc in dec.cycles:
        if len(cyc) != v or sorted(cyc) != list(range(v)):
            raise MalformedComponent(f"cycle {cyc!r} is not Hamiltonian on {v} vertices")
        for i in range(v):
            add(cyc[i], cyc[(i + 1) % v])
    if dec.one_factor is not None:
        covered = sorted(x for e in dec.one_factor for x in e)
        if covered != list(range(v)):
            raise MalformedComponent("1-factor does not cover every vertex exactly once")
        for x, y in dec.one_factor:
            add(x, y)
    for tri in dec.triangles:
        if len(tri) != 3 or len(set(tri)) != 3:
            raise MalformedComponent(f"triangle {tri!r} is not a 3-set")
        for x, y in combinations(tri, 2):
            add(x, y)
    expected = np.ones((v, v), dtype=np.int64)
    n_edges = v * (v - 1) // 2
    return _report(list(range(v)), counts, expected, n_edges, int(np.triu(counts, 1).sum()))


@dataclass
class BruteForceResult:
    design: GddDesign | None
    exhaustive: bool  # True when the whole search tree was explored
    nodes: int


def brute_force_gdd(m: int, n: int, lam: int, node_budget: int = 2_000_000) -> BruteForceResult:
    """Exact cover with multiplicity over all 3-subsets of the m + n points.

    Always branches on the lexicographically least pair that still needs
    blocks; repeated branching on the same pair takes third points in
    nondecreasing order, so each block multiset is generated once.
    """
    v = m + n
    need = [[0] * v for _ in range(v)]
    for i, j in combinations(range(v), 2):
        need[i][j] = need[j][i] = 3 if (i < m) == (j < m) else lam
    params = DesignParams(m, n, lam)
    points = GroupedPointSet.canonical(m, n)

    total = sum(need[i][j] for i, j in combinations(range(v), 2))
    # every block uses two slots at each of its points and three slots overall
    if total % 3 or any(sum(row) % 2 for row in need):
        return BruteForceResult(None, True, 0)

    pairs = list(combinations(range(v), 2))
    blocks: list[tuple[int, int, int]] = []
    nodes = 0
    exhausted_budget = False

    def rec(start: int, last: tuple[int, int] | None) -> bool:
        nonlocal nodes, exhausted_budget
        nodes += 1
        if nodes > node_budget:
            exhausted_budget = True
            return False
        while start < len(pairs) and need[pairs[start][0]][pairs[start][1]] == 0:
            start += 1
        if start == len(pairs):
            return True
        x, y = pairs[start]
        low = last[1] if last is not None and last[0] == start else 0
        for w in range(low, v):
            if w == x or w == y or need[x][w] == 0 or need[y][w] == 0:
                continue
            for a, b in ((x, y), (x, w), (y, w)):
                need[a][b] -= 1
                need[b][a] -= 1
            blocks.append((x, y, w))
            if rec(start, (start, w)):
                return True
            blocks.pop()
            for a, b in ((x, y), (x, w), (y, w)):
                need[a][b] += 1
                need[b][a] += 1
            if exhausted_budget:
                return False
        return False

    found = rec(0, None)
    if found:
        return BruteForceResult(GddDesign.from_blocks(params, points, blocks), True, nodes)
    return BruteForceResult(None, not exhausted_budget, nodes)
