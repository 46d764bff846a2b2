"""Block-design value types shared by the builder and the verifier."""

from __future__ import annotations

from dataclasses import dataclass

from .feasibility import DesignParams

Block = tuple[int, int, int]


@dataclass(frozen=True)
class GroupedPointSet:
    M: tuple[int, ...]
    N: tuple[int, ...]

    def __post_init__(self):
        if set(self.M) & set(self.N):
            raise ValueError("groups M and N must be disjoint")
        if len(set(self.M)) != len(self.M) or len(set(self.N)) != len(self.N):
            raise ValueError("repeated point inside a group")

    @classmethod
    def canonical(cls, m: int, n: int) -> GroupedPointSet:
        """M = 0..m-1 and N = m..m+n-1."""
        return cls(tuple(range(m)), tuple(range(m, m + n)))

    def labels(self) -> dict[int, str]:
        out = {x: f"m{i}" for i, x in enumerate(self.M)}
        out.update({x: f"n{i}" for i, x in enumerate(self.N)})
        return out


@dataclass(frozen=True)
class GddDesign:
    params: DesignParams
    points: GroupedPointSet
    blocks: tuple[Block, ...]

    @classmethod
    def from_blocks(cls, params: DesignParams, points: GroupedPointSet, blocks) -> GddDesign:
        """Build with blocks canonicalized: each sorted, then the list sorted."""
        return cls(params, points, tuple(sorted(tuple(sorted(b)) for b in blocks)))

    @property
    def m(self) -> int:
        return self.params.m

    @property
    def n(self) -> int:
        return self.params.n

    @property
    def lam(self) -> int:
        return self.params.lambda2
