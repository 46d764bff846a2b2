"""Steiner and threefold triple systems on the points 0..v-1."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations


@dataclass(frozen=True)
class TripleSystem:
    v: int
    triples: tuple[tuple[int, int, int], ...]
    index: int

    def pair_counts(self) -> Counter:
        c = Counter()
        for t in self.triples:
            c.update(combinations(sorted(t), 2))
        return c

    def is_valid(self) -> bool:
        if any(len(set(t)) != 3 or not all(0 <= x < self.v for x in t) for t in self.triples):
            return False
        counts = self.pair_counts()
        return len(counts) == self.v * (self.v - 1) // 2 and set(counts.values()) <= {self.index}


def _system(v, triples, index) -> TripleSystem:
    return TripleSystem(v, tuple(sorted(tuple(sorted(t)) for t in triples)), index)


def _bose(v: int):
    # v = 6t + 3 on Z_{2t+1} x Z_3 with the idempotent commutative quasigroup x o y = (x + y)/2
    q = v // 3
    half = (q + 1) // 2
    pt = lambda x, i: x + q * (i % 3)  # noqa: E731
    out = [(pt(x, 0), pt(x, 1), pt(x, 2)) for x in range(q)]
    for x, y in combinations(range(q), 2):
        z = ((x + y) * half) % q
        for i in range(3):
            out.append((pt(x, i), pt(y, i), pt(z, i + 1)))
    return out


def _skolem(v: int):
    # v = 6t + 1 on Z_{2t} x Z_3 plus infinity, half-idempotent quasigroup
    t = (v - 1) // 6
    q = 2 * t
    inf = v - 1

    def op(x, y):
        s = (x + y) % q
        return s // 2 if s % 2 == 0 else (s - 1) // 2 + t

    pt = lambda x, i: x + q * (i % 3)  # noqa: E731
    out = [(pt(x, 0), pt(x, 1), pt(x, 2)) for x in range(t)]
    for x in range(t):
        for i in range(3):
            out.append((inf, pt(x + t, i), pt(x, i + 1)))
    for x, y in combinations(range(q), 2):
        for i in range(3):
            out.append((pt(x, i), pt(y, i), pt(op(x, y), i + 1)))
    return out


def steiner_triple_system(v: int) -> TripleSystem:
    """STS(v) by Bose (v = 3 mod 6) or Skolem (v = 1 mod 6)."""
    if v % 6 not in (1, 3):
        raise ValueError(f"STS({v}) needs v = 1 or 3 (mod 6)")
    if v == 1:
        return TripleSystem(1, (), 1)
    triples = _bose(v) if v % 6 == 3 else _skolem(v)
    return _system(v, triples, 1)


def _quasigroup_threefold(v: int):
    half = (v + 1) // 2
    return [(x, y, ((x + y) * half) % v) for x, y in combinations(range(v), 2)]


def threefold_triple_system(v: int) -> TripleSystem:
    """A triangle decomposition of 3K_v, v odd."""
    if v % 2 == 0 or v < 1:
        raise ValueError(f"3K_{v} has a triangle decomposition only for odd v")
    if v == 1:
        return TripleSystem(1, (), 3)
    if v % 6 in (1, 3):
        sts = steiner_triple_system(v)
        return _system(v, sts.triples * 3, 3)
    ts = _system(v, _quasigroup_threefold(v), 3)
    if ts.is_valid():
        return ts
    tris = threefold_search(v)
    if tris is None:
        raise RuntimeError(f"no triangle decomposition found for 3K_{v}")
    return _system(v, tris, 3)


def threefold_search(v: int, budget: int = 10**6):
    """Backtracking triangle decomposition of the multigraph 3K_v."""
    need = {p: 3 for p in combinations(range(v), 2)}
    out = []
    nodes = 0

    def key(a, b):
        return (a, b) if a < b else (b, a)

    def rec(floor_w):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            return False
        pair = next((p for p in sorted(need) if need[p]), None)
        if pair is None:
            return True
        x, y = pair
        others = [w for w in range(v) if w not in pair and need[key(x, w)] and need[key(y, w)]]
        for w in others:
            # repeated branching on the same pair takes w in nondecreasing order
            if floor_w is not None and floor_w[0] == pair and w < floor_w[1]:
                continue
            for q in (pair, key(x, w), key(y, w)):
                need[q] -= 1
            out.append((x, y, w))
            if rec((pair, w)):
                return True
            out.pop()
            for q in (pair, key(x, w), key(y, w)):
                need[q] += 1
        return False

    return list(out) if rec(None) else None
