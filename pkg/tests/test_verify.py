import pytest

from gdd3.decomp import CycleDecomposition, decompose_mixed, walecki_cycles
from gdd3.design import GddDesign, GroupedPointSet
from gdd3.feasibility import DesignParams
from gdd3.verify import (
    MalformedBlock,
    MalformedComponent,
    brute_force_gdd,
    verify_decomposition,
    verify_gdd,
)

# GDD(3,1;3,2) on M = {a,b,c} = {0,1,2}, N = {p} = {3}
A, B, C, P = 0, 1, 2, 3
SMALL = [(A, B, C), (A, B, C), (P, A, B), (P, B, C), (P, C, A)]


def design(blocks):
    return GddDesign.from_blocks(DesignParams(3, 1, 2), GroupedPointSet.canonical(3, 1), blocks)


def test_small_design_ok():
    r = verify_gdd(design(SMALL))
    assert r.ok and r.block_count_expected == 5
    assert r.pair_counts[(A, B)] == 3 and r.pair_counts[(A, P)] == 2


def test_missing_block():
    r = verify_gdd(design(SMALL[:-1]))
    assert not r.ok
    assert len(r.violations) == 3
    assert "3 violations" in r.summary()


def test_malformed_blocks():
    with pytest.raises(MalformedBlock):
        verify_gdd(design(SMALL + [(A, A, B)]))
    with pytest.raises(MalformedBlock):
        verify_gdd(design(SMALL + [(A, B, 9)]))


def test_group_sets_must_be_disjoint():
    with pytest.raises(ValueError):
        GroupedPointSet((0, 1), (1, 2))


def test_verify_decomposition_examples():
    w = CycleDecomposition(5, tuple(walecki_cycles(5)), None, ())
    assert verify_decomposition(5, w).ok

    cycles = walecki_cycles(7)
    reordered = CycleDecomposition(7, tuple(reversed(cycles)), None, ())
    assert verify_decomposition(7, reordered).ok
    duplicated = CycleDecomposition(7, (cycles[0], cycles[0], cycles[2]), None, ())
    r = verify_decomposition(7, duplicated)
    assert not r.ok and len(r.violations) == 14

    d = decompose_mixed(9, 1, False)
    short = CycleDecomposition(9, d.cycles, None, d.triangles[1:])
    r = verify_decomposition(9, short)
    assert not r.ok and len(r.violations) == 3


def test_malformed_components():
    with pytest.raises(MalformedComponent):
        verify_decomposition(5, CycleDecomposition(5, ((0, 1, 2, 3),), None, ()))
    with pytest.raises(MalformedComponent):
        verify_decomposition(4, CycleDecomposition(4, (), ((0, 1), (1, 2)), ()))


def test_brute_force_examples():
    r = brute_force_gdd(3, 1, 2)
    assert r.design is not None and len(r.design.blocks) == 5 and verify_gdd(r.design).ok
    r = brute_force_gdd(3, 3, 4)
    assert r.design is not None and len(r.design.blocks) == 18 and verify_gdd(r.design).ok
    r = brute_force_gdd(2, 1, 1)
    assert r.design is None and r.exhaustive


def test_brute_force_budget_flag():
    # NC3 fails, so no design, but the tree is not tiny
    r = brute_force_gdd(3, 2, 5, node_budget=10)
    assert r.design is None and not r.exhaustive
    r = brute_force_gdd(3, 2, 5)
    assert r.design is None and r.exhaustive
