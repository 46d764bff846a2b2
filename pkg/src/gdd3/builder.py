"""Assemble GDD(m, n; 3, lambda) block lists from cycle decompositions.

Every construction follows the same pattern: decompose 3K_v on one group
into Hamiltonian cycles, 1-factors and triangles, keep the triangles as
blocks, and star each cycle or factor to a point of the other group.  A
cycle starred to p puts p with each of its vertices twice; a factor, once.
"""

from __future__ import annotations

from .decomp import (
    NoFeasibleSplit,
    cycle_edges,
    cycle_to_two_factors,
    decompose_mixed,
    doubled_copy_pieces,
    split_across_copies,
    split_with_doubled_copy,
)
from .design import Block, GddDesign, GroupedPointSet
from .feasibility import (
    Classification,
    DesignParams,
    Method,
    Verdict,
    check_necessary,
    classify,
    precondition_failure,
)
from .triples import threefold_triple_system


class PreconditionViolated(ValueError):
    pass


class NotConstructible(ValueError):
    def __init__(self, classification: Classification, params: DesignParams):
        self.classification = classification
        self.params = params
        m, n, lam = params
        super().__init__(f"GDD({m},{n};3,{lam}) is not constructible here: {classification}")


def star(p, edges) -> list[Block]:
    """One block {p, x, y} per edge {x, y}, keeping multiplicity."""
    out = []
    for x, y in edges:
        if p in (x, y):
            raise ValueError(f"point {p!r} lies on edge {(x, y)!r}")
        out.append((p, x, y))
    return out


class _Pieces:
    """Cycles, 1-factors and triangles of 3K_v, relabelled onto ``labels``."""

    def __init__(self, labels, total: int, with_factor: bool, seed: int):
        v = len(labels)
        parts = []
        try:
            for a in split_across_copies(v, total, with_factor):
                d = decompose_mixed(v, a, with_factor, seed)
                parts.append((d.cycles, [d.one_factor] if with_factor else [], d.triangles))
        except NoFeasibleSplit:
            a = split_with_doubled_copy(v, total, with_factor)
            d = decompose_mixed(v, a, False, seed)
            cycle, tris = doubled_copy_pieces(v)
            parts = [(d.cycles, [], d.triangles), ([cycle], [], tris)]
        relabel = lambda xs: tuple(labels[x] for x in xs)  # noqa: E731
        self.cycles = [relabel(c) for part in parts for c in part[0]]
        self.factors = [[relabel(e) for e in f] for part in parts for f in part[1]]
        self.triangles = [relabel(t) for part in parts for t in part[2]]

    def take_cycles(self, k: int):
        taken, self.cycles = self.cycles[:k], self.cycles[k:]
        return taken

    def take_factors(self, k: int):
        taken, self.factors = self.factors[:k], self.factors[k:]
        return taken

    def cycles_as_factors(self, k: int):
        """Turn k cycles (even length) into 2k 1-factors."""
        return [f for c in self.take_cycles(k) for f in cycle_to_two_factors(c)]


def _star_cycles(p, cycles) -> list[Block]:
    return [b for c in cycles for b in star(p, cycle_edges(c))]


def _star_factors(p, factors) -> list[Block]:
    return [b for f in factors for b in star(p, f)]


def _threefold(labels) -> list[Block]:
    ts = threefold_triple_system(len(labels))
    return [tuple(labels[x] for x in t) for t in ts.triples]


def _odd_odd_blocks(M, N, lam: int, seed: int, triples_on_n: bool = True) -> list[Block]:
    # 3K_M into n*lam/2 cycles, lam/2 per point of N
    per = lam // 2
    pieces = _Pieces(M, len(N) * per, False, seed)
    blocks = list(pieces.triangles)
    for p in N:
        blocks += _star_cycles(p, pieces.take_cycles(per))
    if triples_on_n:
        blocks += _threefold(N)
    return blocks


def _even_odd_blocks(M, N, lam: int, seed: int, triples_on_n: bool = True) -> list[Block]:
    # 3K_M into (n*lam - 3)/2 cycles plus three 1-factors
    n = len(N)
    pieces = _Pieces(M, (n * lam - 3) // 2, True, seed)
    blocks = list(pieces.triangles)
    if n == 1:
        (p,) = N
        blocks += _star_factors(p, pieces.take_factors(3))
        blocks += _star_cycles(p, pieces.take_cycles((lam - 3) // 2))
    else:
        factors = pieces.take_factors(3) + pieces.cycles_as_factors((n - 3) // 2)
        per = (lam - 1) // 2
        for p, f in zip(N, factors):
            blocks += star(p, f)
            blocks += _star_cycles(p, pieces.take_cycles(per))
        if triples_on_n:
            blocks += _threefold(N)
    return blocks


def _serve_n_from_rest(pieces: _Pieces, N, lam: int) -> list[Block]:
    # n/2 cycles become n factors, one per N-point, then (lam-1)/2 cycles each
    blocks = []
    factors = pieces.cycles_as_factors(len(N) // 2)
    per = (lam - 1) // 2
    for p, f in zip(N, factors):
        blocks += star(p, f)
        blocks += _star_cycles(p, pieces.take_cycles(per))
    return blocks


def _require(method: Method, m: int, n: int, lam: int) -> DesignParams:
    params = DesignParams(m, n, lam)
    bad = check_necessary(params)
    if bad:
        names = ",".join(sorted(c.value for c in bad))
        raise PreconditionViolated(f"({m},{n},{lam}) fails necessary conditions {{{names}}}")
    if lam < 4:
        raise PreconditionViolated(f"need lambda >= 4, got {lam}")
    why = precondition_failure(method, m, n, lam)
    if why:
        raise PreconditionViolated(f"{method.value} does not apply to ({m},{n},{lam}): {why}")
    return params


def _design(params: DesignParams, blocks) -> GddDesign:
    return GddDesign.from_blocks(params, GroupedPointSet.canonical(params.m, params.n), blocks)


def _groups(m: int, n: int):
    return list(range(m)), list(range(m, m + n))


def build_odd_odd(m: int, n: int, lam: int, seed: int = 0) -> GddDesign:
    params = _require(Method.ODD_ODD, m, n, lam)
    M, N = _groups(m, n)
    return _design(params, _odd_odd_blocks(M, N, lam, seed))


def build_even_odd(m: int, n: int, lam: int, seed: int = 0) -> GddDesign:
    params = _require(Method.EVEN_ODD, m, n, lam)
    M, N = _groups(m, n)
    return _design(params, _even_odd_blocks(M, N, lam, seed))


def build_dual_star(m: int, n: int, lam: int, seed: int = 0) -> GddDesign:
    """M-side carries lambda - 2 of every cross pair, one N-cycle per M-point the rest."""
    params = _require(Method.DUAL_STAR, m, n, lam)
    M, N = _groups(m, n)
    side = _odd_odd_blocks if m % 2 else _even_odd_blocks
    blocks = side(M, N, lam - 2, seed, triples_on_n=False)
    pieces = _Pieces(N, m, False, seed)
    blocks += pieces.triangles
    for p in M:
        blocks += _star_cycles(p, pieces.take_cycles(1))
    return _design(params, blocks)


def build_pull_one(m: int, n: int, lam: int, seed: int = 0) -> GddDesign:
    """Fix a in M: GDD(n,1) on N + {a}, then 3K on the other m - 1 points."""
    params = _require(Method.PULL_ONE, m, n, lam)
    M, N = _groups(m, n)
    a, rest = M[0], M[1:]
    blocks = _even_odd_blocks(N, [a], lam, seed)
    pieces = _Pieces(rest, n * lam // 2, True, seed)
    blocks += pieces.triangles
    blocks += _star_factors(a, pieces.take_factors(3))
    blocks += _serve_n_from_rest(pieces, N, lam)
    return _design(params, blocks)


def build_pull_three(m: int, n: int, lam: int, seed: int = 0) -> GddDesign:
    """Fix a, b, c in M: GDD(n,3) on N + {a,b,c}, then 3K on the other m - 3 points."""
    params = _require(Method.PULL_THREE, m, n, lam)
    M, N = _groups(m, n)
    trio, rest = M[:3], M[3:]
    blocks = _even_odd_blocks(N, trio, lam, seed)
    pieces = _Pieces(rest, n * lam // 2 + 3, True, seed)
    blocks += pieces.triangles
    for p in trio:
        blocks += _star_factors(p, pieces.take_factors(1))
        blocks += _star_cycles(p, pieces.take_cycles(1))
    blocks += _serve_n_from_rest(pieces, N, lam)
    return _design(params, blocks)


BUILDERS = {
    Method.ODD_ODD: build_odd_odd,
    Method.EVEN_ODD: build_even_odd,
    Method.DUAL_STAR: build_dual_star,
    Method.PULL_ONE: build_pull_one,
    Method.PULL_THREE: build_pull_three,
}


def build(m: int, n: int, lam: int, seed: int = 0) -> GddDesign:
    """Build with the method chosen by :func:`classify`."""
    c = classify(m, n, lam)
    if c.verdict is not Verdict.CONSTRUCTIBLE:
        raise NotConstructible(c, DesignParams(m, n, lam))
    return BUILDERS[c.method](m, n, lam, seed)
