"""Decompose K_v into Hamiltonian cycles, an optional 1-factor and triangles.

Strategy ladder used by :func:`decompose_mixed`:

1. a partition of the differences of Z_v into cycle, triangle and gadget
   blocks (:func:`difference_partition`), realized directly;
2. :func:`backtrack_decompose`: Walecki prefix or randomized Hamiltonian
   cycle extraction, then exact triangle search on whatever is left.

Vertices are always ``0..v-1``.
"""

from __future__ import annotations

import os
import random
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import gcd

import networkx as nx

DEFAULT_SEED = 0
BUDGET_ENV = "GDD3_SEARCH_BUDGET"


def default_budget() -> int:
    """Node budget for one decomposition search (env ``GDD3_SEARCH_BUDGET``)."""
    return int(os.environ.get(BUDGET_ENV, 10**7))


class InfeasibleParameters(ValueError):
    pass


class SearchExhausted(RuntimeError):
    pass


class NoFeasibleSplit(ValueError):
    pass


Edge = tuple[int, int]


def _edge(x: int, y: int) -> Edge:
    return (x, y) if x < y else (y, x)


def cycle_edges(cycle) -> list[Edge]:
    return [_edge(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))]


def canonical_cycle(cycle) -> tuple[int, ...]:
    """Rotate to start at the smallest vertex, oriented towards the smaller neighbour."""
    c = list(cycle)
    i = c.index(min(c))
    c = c[i:] + c[:i]
    if len(c) > 2 and c[-1] < c[1]:
        c = [c[0]] + c[:0:-1]
    return tuple(c)


@dataclass(frozen=True)
class CycleDecomposition:
    v: int
    cycles: tuple[tuple[int, ...], ...]
    one_factor: tuple[Edge, ...] | None
    triangles: tuple[tuple[int, int, int], ...]

    @property
    def k(self) -> int:
        return len(self.cycles)

    def edges(self) -> list[Edge]:
        out = []
        for c in self.cycles:
            out.extend(cycle_edges(c))
        if self.one_factor:
            out.extend(_edge(*e) for e in self.one_factor)
        for t in self.triangles:
            a, b, c = t
            out.extend((_edge(a, b), _edge(a, c), _edge(b, c)))
        return out


def _make_decomposition(v, cycles, factor, triangles) -> CycleDecomposition:
    return CycleDecomposition(
        v=v,
        cycles=tuple(canonical_cycle(c) for c in cycles),
        one_factor=None if factor is None else tuple(sorted(_edge(*e) for e in factor)),
        triangles=tuple(sorted(tuple(sorted(t)) for t in triangles)),
    )


# ---------------------------------------------------------------------------
# feasibility gates


def max_cycles(v: int) -> int:
    return (v - 1) // 2 if v % 2 else (v - 2) // 2


def feasible_mixed(v: int, k: int, with_factor: bool) -> bool:
    """Edge-count gate for k Hamiltonian cycles (+ 1-factor) + triangles in K_v."""
    if v < 3:
        raise ValueError("v must be at least 3")
    if with_factor != (v % 2 == 0):
        return False
    if not 0 <= k <= max_cycles(v):
        return False
    left = v * (v - 1) // 2 - k * v - (v // 2 if with_factor else 0)
    return left >= 0 and left % 3 == 0


def split_across_copies(v: int, k_total: int, with_factor: bool) -> tuple[int, int, int]:
    """Split k_total cycles over the three copies of K_v inside 3K_v.

    Returns the lexicographically largest (a1 >= a2 >= a3) whose parts are
    each feasible for one copy.
    """
    allowed = [a for a in range(max_cycles(v) + 1) if feasible_mixed(v, a, with_factor)]
    if k_total >= 0:
        for a1 in reversed(allowed):
            for a2 in reversed(allowed):
                if a2 > a1:
                    continue
                a3 = k_total - a1 - a2
                if 0 <= a3 <= a2 and a3 in allowed:
                    return (a1, a2, a3)
    raise NoFeasibleSplit(
        f"cannot write {k_total} as a1+a2+a3 with each part in {allowed} "
        f"(cycle counts admissible for one copy of K_{v})"
    )


@lru_cache(maxsize=None)
def _doubled_triples(v: int, node_budget: int = 200_000):
    # difference triples covering {1} + {2, ..., h} twice, h = (v - 1) / 2
    if v < 5 or v % 2 == 0 or (v - 2) % 3:
        return None
    h = (v - 1) // 2
    left = Counter({1: 1, **{d: 2 for d in range(2, h + 1)}})
    out = []
    nodes = 0

    def rec() -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            return False
        if not +left:
            return True
        # the largest difference left has the fewest partners
        a = max(d for d in left if left[d])
        left[a] -= 1
        for b in range(a, 0, -1):
            if not left[b]:
                continue
            left[b] -= 1
            for c in {a - b, v - a - b}:
                if 1 <= c <= b and left[c]:
                    left[c] -= 1
                    out.append((c, b, a))
                    if rec():
                        return True
                    out.pop()
                    left[c] += 1
            left[b] += 1
        left[a] += 1
        return False

    return tuple(out) if rec() else None


def doubled_copy_pieces(v: int):
    """2K_v as the cycle (0, 1, ..., v-1) plus triangles, or None.

    Needs v odd and v = 2 (mod 3); the triangles come from difference
    triples on Z_v found by a bounded search (quick up to v = 65).
    """
    triples = _doubled_triples(v)
    if triples is None:
        return None
    tris = [tuple(sorted(t)) for block in triples for t in _triple_orbit(v, block)]
    return tuple(range(v)), sorted(tris)


def split_with_doubled_copy(v: int, k_total: int, with_factor: bool) -> int:
    """Fallback when no per-copy split exists: k_total - 1 cycles on one copy
    and a single cycle on the other two copies taken together.

    Returns the cycle count for the single copy.
    """
    a = k_total - 1
    if with_factor or a < 0 or not feasible_mixed(v, a, False) or _doubled_triples(v) is None:
        raise NoFeasibleSplit(f"no doubled-copy split of {k_total} cycles over 3K_{v}")
    return a


# ---------------------------------------------------------------------------
# classical pieces


def walecki_cycles(v: int) -> list[tuple[int, ...]]:
    """(v-1)/2 edge-disjoint Hamiltonian cycles covering K_v, v odd."""
    if v % 2 == 0 or v < 3:
        raise ValueError("Walecki decomposition needs odd v >= 3")
    w = (v - 1) // 2
    inf = v - 1
    zigzag = [0]
    for j in range(1, w + 1):
        zigzag.append(j)
        if j < w:
            zigzag.append((-j) % (2 * w))
    # zigzag visits all of Z_{2w}
    return [
        canonical_cycle([inf] + [(z + i) % (2 * w) for z in zigzag]) for i in range(w)
    ]


def cycle_to_two_factors(cycle) -> tuple[tuple[Edge, ...], tuple[Edge, ...]]:
    """Split an even cycle into its two alternating perfect matchings."""
    if len(cycle) % 2:
        raise ValueError("cycle must have even length")
    edges = [(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))]
    first = tuple(_edge(*e) for e in edges[0::2])
    second = tuple(_edge(*e) for e in edges[1::2])
    return first, second


# ---------------------------------------------------------------------------
# difference method


@dataclass(frozen=True)
class DifferencePartition:
    """A partition of the differences of Z_v into realizable blocks.

    ``cycle_differences``: d coprime to v, one circulant Hamiltonian cycle each.
    ``paired_cycle_differences``: {d, e} generating Z_v; their 4-regular
    circulant is split into two Hamiltonian cycles by search.
    ``triple_differences``: {a, b, c} with a + b = +-c, v triangles each.
    ``third_orbit``: difference v/3 as v/3 disjoint triangles.
    ``mixed_pairs``: (d, 2d), d a unit, 3 | v; one Hamiltonian cycle plus a
    triangle factor.
    ``factor_difference``: v/2 as the 1-factor (even v).
    """

    v: int
    cycle_differences: tuple[int, ...] = ()
    paired_cycle_differences: tuple[tuple[int, int], ...] = ()
    triple_differences: tuple[tuple[int, int, int], ...] = ()
    third_orbit: bool = False
    mixed_pairs: tuple[tuple[int, int], ...] = ()
    factor_difference: int | None = None

    @property
    def cycle_count(self) -> int:
        return (
            len(self.cycle_differences)
            + 2 * len(self.paired_cycle_differences)
            + len(self.mixed_pairs)
        )

    def differences(self) -> list[int]:
        out = list(self.cycle_differences)
        for block in (*self.paired_cycle_differences, *self.triple_differences, *self.mixed_pairs):
            out.extend(block)
        if self.third_orbit:
            out.append(self.v // 3)
        if self.factor_difference is not None:
            out.append(self.factor_difference)
        return sorted(out)


def _diff(x: int, v: int) -> int:
    x %= v
    return min(x, v - x)


@lru_cache(maxsize=None)
def _mixed_base(v: int):
    """Triangle factor {3i, 3i+1, 3i+2} in C_v(1, 2) and the leftover cycle, if Hamiltonian."""
    if v % 3 or v < 9:
        return None
    triangles = [(3 * i, 3 * i + 1, 3 * i + 2) for i in range(v // 3)]
    used = set()
    for a, b, c in triangles:
        used.update((_edge(a, b), _edge(b, c), _edge(a, c)))
    rest = [
        _edge(x, (x + d) % v)
        for x in range(v)
        for d in (1, 2)
        if _edge(x, (x + d) % v) not in used
    ]
    cycle = _edges_to_cycle(v, rest)
    if cycle is None:
        return None
    return tuple(triangles), cycle


def _edges_to_cycle(v: int, edges) -> tuple[int, ...] | None:
    """Return the Hamiltonian cycle formed by ``edges``, or None."""
    if len(edges) != v:
        return None
    adj = {x: [] for x in range(v)}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    if any(len(nb) != 2 for nb in adj.values()):
        return None
    cycle = [0]
    prev, cur = None, 0
    while True:
        nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
        if nxt == 0:
            break
        cycle.append(nxt)
        prev, cur = cur, nxt
        if len(cycle) > v:
            return None
    return tuple(cycle) if len(cycle) == v else None


def difference_partition(
    v: int, k: int, with_factor: bool, node_budget: int = 200_000
) -> DifferencePartition | None:
    """Search for a :class:`DifferencePartition` with exactly k Hamiltonian cycles.

    Triangle blocks are chosen first; the differences left in the cycle pool
    are then paired off so every non-unit shares a block with a partner that
    generates Z_v.  Returns None when no partition is found within budget.
    """
    if not feasible_mixed(v, k, with_factor):
        return None
    top = v // 2 - 1 if with_factor else (v - 1) // 2
    diffs = list(range(1, top + 1))
    third = v // 3 if v % 3 == 0 else None
    mixed_ok = _mixed_base(v) is not None
    nodes = 0
    blocks: list[tuple[str, tuple[int, ...]]] = []
    pool: list[int] = []

    def unit(d):
        return gcd(d, v) == 1

    def rec(remaining: list[int], mixed: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise _BudgetOut
        if not remaining:
            if len(pool) != k - mixed:
                return False
            pairing = _pair_pool(v, pool)
            if pairing is None:
                return False
            blocks.extend(pairing)
            return True
        slots = k - mixed - len(pool)
        # differences still owed to triangle blocks: triple -3, third -1, mixed -1, pool 0
        owed = len(remaining) - slots
        if slots < 0 or owed < 0:
            return False
        d = remaining[0]
        rest = remaining[1:]
        rest_set = set(rest)
        if owed >= 3:
            for e in rest:
                for f in sorted({_diff(d + e, v), _diff(d - e, v)}):
                    if f > e and f in rest_set:
                        blocks.append(("triple", (d, e, f)))
                        if rec([x for x in rest if x not in (e, f)], mixed):
                            return True
                        blocks.pop()
        if d == third and owed >= 1:
            blocks.append(("third", (d,)))
            if rec(rest, mixed):
                return True
            blocks.pop()
        if slots:
            pool.append(d)
            if rec(rest, mixed):
                return True
            pool.pop()
        if mixed_ok and owed >= 1 and slots >= 1:
            for e in rest:
                if third in (d, e):
                    continue
                if e == _diff(2 * d, v) and unit(d):
                    pair = (d, e)
                elif d == _diff(2 * e, v) and unit(e):
                    pair = (e, d)
                else:
                    continue
                blocks.append(("mixed", pair))
                if rec([x for x in rest if x != e], mixed + 1):
                    return True
                blocks.pop()
        return False

    try:
        found = rec(diffs, 0)
    except _BudgetOut:
        found = False
    if not found:
        return None
    kinds = {"cycle": [], "pair": [], "triple": [], "third": [], "mixed": []}
    for kind, block in blocks:
        kinds[kind].append(block)
    return DifferencePartition(
        v=v,
        cycle_differences=tuple(sorted(b[0] for b in kinds["cycle"])),
        paired_cycle_differences=tuple(sorted(kinds["pair"])),
        triple_differences=tuple(sorted(kinds["triple"])),
        third_orbit=bool(kinds["third"]),
        mixed_pairs=tuple(sorted(kinds["mixed"])),
        factor_difference=v // 2 if with_factor else None,
    )


def _pair_pool(v: int, pool: list[int]):
    """Group pool differences into unit singletons and generating pairs.

    Every non-unit must share a pair with a partner generating Z_v; this is a
    maximum-weight matching where an edge is worth its number of non-units.
    """
    non_units = {d for d in pool if gcd(d, v) != 1}
    if not non_units:
        return [("cycle", (d,)) for d in sorted(pool)]
    g = nx.Graph()
    for d, e in combinations(sorted(pool), 2):
        if (d in non_units or e in non_units) and gcd(gcd(d, e), v) == 1:
            g.add_edge(d, e, weight=(d in non_units) + (e in non_units))
    matching = nx.max_weight_matching(g)
    pairs = sorted(tuple(sorted(p)) for p in matching)
    used = {d for p in pairs for d in p}
    if not non_units <= used:
        return None
    return [("pair", p) for p in pairs] + [("cycle", (d,)) for d in sorted(pool) if d not in used]


class _BudgetOut(Exception):
    pass


def _triple_orbit(v: int, block: tuple[int, int, int]) -> list[tuple[int, int, int]]:
    a, b, c = block
    if _diff(a + b, v) == c:
        s, t = a, b
    elif _diff(a - b, v) == c:
        s, t = a, -b
    else:
        raise ValueError(f"{block} is not a difference triple mod {v}")
    return [(x, (x + s) % v, (x + s + t) % v) for x in range(v)]


def realize_partition(
    part: DifferencePartition, seed: int = DEFAULT_SEED, budget: int | None = None
) -> CycleDecomposition | None:
    """Turn a difference partition into explicit cycles, factor and triangles."""
    v = part.v
    budget = default_budget() if budget is None else budget
    rng = random.Random(seed)
    cycles = [[(i * d) % v for i in range(v)] for d in part.cycle_differences]
    triangles = []
    for block in part.triple_differences:
        triangles.extend(_triple_orbit(v, block))
    if part.third_orbit:
        t = v // 3
        triangles.extend((x, x + t, x + 2 * t) for x in range(t))
    for d, _ in part.mixed_pairs:
        base_triangles, base_cycle = _mixed_base(v)
        triangles.extend(tuple((d * x) % v for x in tri) for tri in base_triangles)
        cycles.append([(d * x) % v for x in base_cycle])
    for d, e in part.paired_cycle_differences:
        pair = _two_hamiltonian_cycles(v, d, e, rng, budget)
        if pair is None:
            return None
        cycles.extend(pair)
    factor = None
    if part.factor_difference is not None:
        factor = [(x, x + v // 2) for x in range(v // 2)]
    return _make_decomposition(v, cycles, factor, triangles)


# ---------------------------------------------------------------------------
# search primitives


def _adjacency(v: int, edges) -> list[set[int]]:
    adj = [set() for _ in range(v)]
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    return adj


def _hamiltonian_cycles(adj: list[set[int]], rng: random.Random, counter: list[int], budget: int):
    """Yield Hamiltonian cycles of ``adj`` by randomized DFS from vertex 0.

    ``counter[0]`` accumulates visited nodes; iteration stops at ``budget``.
    """
    v = len(adj)
    path = [0]
    on_path = [False] * v
    on_path[0] = True

    def options(x):
        nb = [y for y in adj[x] if not on_path[y]]
        rng.shuffle(nb)
        # fewest onward moves first
        nb.sort(key=lambda y: sum(1 for z in adj[y] if not on_path[z]))
        return nb

    def dead_end() -> bool:
        # an unvisited vertex needs two usable neighbours (path ends count)
        ends = (path[0], path[-1])
        for y in range(v):
            if on_path[y]:
                continue
            free = sum(1 for z in adj[y] if not on_path[z] or z in ends)
            if free < 2:
                return True
        return False

    def rec():
        counter[0] += 1
        if counter[0] > budget:
            return
        if len(path) == v:
            if 0 in adj[path[-1]]:
                yield tuple(path)
            return
        if dead_end():
            return
        for y in options(path[-1]):
            path.append(y)
            on_path[y] = True
            yield from rec()
            on_path[y] = False
            path.pop()
            if counter[0] > budget:
                return

    yield from rec()


def _components(v: int, edges) -> int:
    adj = _adjacency(v, edges)
    seen = [False] * v
    count = 0
    for s in range(v):
        if seen[s]:
            continue
        count += 1
        seen[s] = True
        stack = [s]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
    return count


def _two_hamiltonian_cycles(v, d, e, rng, budget):
    """Split the connected circulant C_v(d, e) into two Hamiltonian cycles.

    Starts from the 2-factorization by difference and swaps colours on
    alternating 4-cycles until both colour classes are connected.
    """
    colour = {}
    for x in range(v):
        colour[_edge(x, (x + d) % v)] = 0
        colour[_edge(x, (x + e) % v)] = 1
    if len(colour) != 2 * v:
        return None
    squares = []
    for x in range(v):
        for s in (e, -e):
            q = (x, (x + d) % v, (x + d + s) % v, (x + s) % v)
            if len(set(q)) == 4:
                sq = [_edge(q[i], q[(i + 1) % 4]) for i in range(4)]
                if len(set(sq)) == 4:
                    squares.append(sq)

    def score():
        return sum(
            _components(v, [ed for ed, c in colour.items() if c == side]) for side in (0, 1)
        )

    cur = score()
    steps = 0
    while cur > 2 and steps < budget:
        steps += 1
        alt = [
            sq for sq in squares
            if colour[sq[0]] == colour[sq[2]] != colour[sq[1]] == colour[sq[3]]
        ]
        if not alt:
            return None
        sq = rng.choice(alt)
        for ed in sq:
            colour[ed] ^= 1
        new = score()
        if new <= cur or rng.random() < 0.05:
            cur = new
        else:
            for ed in sq:
                colour[ed] ^= 1
    if cur != 2:
        return None
    return [list(_edges_to_cycle(v, [ed for ed, c in colour.items() if c == side])) for side in (0, 1)]


def triangle_decompose(
    v: int, edges, rng: random.Random | None = None, budget: int = 10**6
) -> list[tuple[int, int, int]] | None:
    """Exact search for a partition of ``edges`` into triangles.

    Branches at a vertex of least positive remaining degree, on the incident
    edge with fewest completing triangles.  Returns None when the budget is
    consumed or no decomposition exists.
    """
    edges = list(edges)
    if len(edges) % 3:
        return None
    adj = _adjacency(v, edges)
    if any(len(nb) % 2 for nb in adj):
        return None
    out: list[tuple[int, int, int]] = []
    nodes = 0
    remaining = len(edges)

    def rec() -> bool:
        nonlocal nodes, remaining
        nodes += 1
        if nodes > budget:
            raise _BudgetOut
        if remaining == 0:
            return True
        x = min((y for y in range(v) if adj[y]), key=lambda y: (len(adj[y]), y))
        best_y, best_common = None, None
        for y in sorted(adj[x]):
            common = adj[x] & adj[y]
            if best_common is None or len(common) < len(best_common):
                best_y, best_common = y, common
                if len(common) <= 1:
                    break
        if not best_common:
            return False
        y = best_y
        choices = sorted(best_common)
        if rng is not None:
            rng.shuffle(choices)
        for w in choices:
            for a, b in ((x, y), (x, w), (y, w)):
                adj[a].discard(b)
                adj[b].discard(a)
            remaining -= 3
            out.append((x, y, w))
            if rec():
                return True
            out.pop()
            remaining += 3
            for a, b in ((x, y), (x, w), (y, w)):
                adj[a].add(b)
                adj[b].add(a)
        return False

    try:
        ok = rec()
    except _BudgetOut:
        return None
    return out if ok else None


# ---------------------------------------------------------------------------
# general fallback


def _complete_edges(v: int) -> set[Edge]:
    return {(x, y) for x, y in combinations(range(v), 2)}


def backtrack_decompose(
    v: int, k: int, with_factor: bool, budget: int | None = None, seed: int = DEFAULT_SEED
) -> CycleDecomposition | None:
    """Randomized extraction of k Hamiltonian cycles, then exact triangle search.

    The first attempt (odd v) uses a Walecki prefix; later attempts draw
    circulant and DFS cycles at random.  Returns None once ``budget`` search
    nodes have been spent.
    """
    if not feasible_mixed(v, k, with_factor):
        return None
    budget = default_budget() if budget is None else budget
    rng = random.Random(seed)
    spent = 0
    attempt = 0
    slice_ = max(2_000, min(200_000, budget // 20))
    while spent < budget:
        remaining = _complete_edges(v)
        factor = None
        if with_factor:
            factor = [(x, x + v // 2) for x in range(v // 2)]
            remaining -= set(factor)
        cycles = []
        if attempt == 0 and v % 2 == 1:
            cycles = [list(c) for c in walecki_cycles(v)[:k]]
        else:
            units = [d for d in range(1, (v + 1) // 2) if gcd(d, v) == 1 and 2 * d != v]
            rng.shuffle(units)
            n_circ = rng.randint(0, min(k, len(units)))
            for d in units[:n_circ]:
                cycles.append([(i * d) % v for i in range(v)])
            ok = True
            for _ in range(k - len(cycles)):
                for c in cycles:
                    remaining -= set(cycle_edges(c))
                adj = _adjacency(v, remaining)
                counter = [0]
                cyc = next(_hamiltonian_cycles(adj, rng, counter, slice_), None)
                spent += counter[0]
                if cyc is None:
                    ok = False
                    break
                cycles.append(list(cyc))
                remaining -= set(cycle_edges(cyc))
            if not ok:
                attempt += 1
                continue
        for c in cycles:
            remaining -= set(cycle_edges(c))
        this_budget = min(slice_, max(1, budget - spent))
        tris = triangle_decompose(v, sorted(remaining), rng if attempt else None, this_budget)
        spent += this_budget
        if tris is not None:
            return _make_decomposition(v, cycles, factor, tris)
        attempt += 1
    return None


@lru_cache(maxsize=4096)
def _decompose_cached(v, k, with_factor, seed, budget):
    if v % 2 and k == max_cycles(v):
        return _make_decomposition(v, walecki_cycles(v), None, [])
    part = difference_partition(v, k, with_factor)
    if part is not None:
        dec = realize_partition(part, seed, budget)
        if dec is not None:
            return dec
    return backtrack_decompose(v, k, with_factor, budget, seed)


def decompose_mixed(
    v: int, k: int, with_factor: bool, seed: int = DEFAULT_SEED, budget: int | None = None
) -> CycleDecomposition:
    """Decompose K_v into k Hamiltonian cycles, a 1-factor iff ``with_factor``, and triangles.

    Raises InfeasibleParameters when the edge-count gate fails and
    SearchExhausted when every strategy runs out of budget.
    """
    if not feasible_mixed(v, k, with_factor):
        raise InfeasibleParameters(
            f"K_{v} has no decomposition into {k} Hamiltonian cycles"
            + (", a 1-factor" if with_factor else "")
            + " and triangles: "
            + infeasibility_reason(v, k, with_factor)
        )
    budget = default_budget() if budget is None else budget
    dec = _decompose_cached(v, k, with_factor, seed, budget)
    if dec is None:
        raise SearchExhausted(f"no decomposition of K_{v} found with k={k} within {budget} nodes")
    return dec


def infeasibility_reason(v: int, k: int, with_factor: bool) -> str:
    if v < 3:
        return "v must be at least 3"
    if with_factor and v % 2:
        return "odd v has no 1-factor"
    if not with_factor and v % 2 == 0:
        return "even v needs the 1-factor (vertex degrees are odd)"
    if not 0 <= k <= max_cycles(v):
        return f"k must lie in 0..{max_cycles(v)}"
    if v % 2:
        rule = {1: "k = 0 (mod 3)", 3: "all k", 5: "k = 2 (mod 3)"}[v % 6]
        return f"v = {v % 6} (mod 6) requires {rule}"
    rule = {0: "all h", 2: "h = 0,3 (mod 6)", 4: "h = 1,4 (mod 6)"}[v % 6]
    return f"v = {v % 6} (mod 6) requires {rule}"
