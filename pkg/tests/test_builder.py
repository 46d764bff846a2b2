from collections import Counter
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gdd3 import (
    Method,
    NotConstructible,
    PreconditionViolated,
    Verdict,
    build,
    build_dual_star,
    build_even_odd,
    build_odd_odd,
    build_pull_one,
    build_pull_three,
    classify,
    star,
    verify_gdd,
)
from gdd3.feasibility import lambda_max


def test_star():
    assert star("p", [("x", "y"), ("y", "z"), ("z", "x")]) == [
        ("p", "x", "y"),
        ("p", "y", "z"),
        ("p", "z", "x"),
    ]
    assert star("p", [("a", "b"), ("c", "d")]) == [("p", "a", "b"), ("p", "c", "d")]
    assert star("p", []) == []
    with pytest.raises(ValueError):
        star("p", [("p", "a")])


@pytest.mark.parametrize(
    "builder,args,count",
    [
        (build_odd_odd, (7, 3, 6), 66),
        (build_odd_odd, (5, 3, 4), 33),
        (build_even_odd, (6, 1, 5), 25),
        (build_even_odd, (8, 3, 5), 71),
        (build_dual_star, (9, 7, 4), 141),
        (build_pull_one, (13, 6, 5), 223),
        (build_pull_one, (25, 4, 9), 606),
        (build_pull_three, (21, 8, 5), 518),
        (build_pull_three, (21, 6, 5), 435),
    ],
)
def test_named_builds(builder, args, count):
    d = builder(*args)
    assert len(d.blocks) == count
    assert verify_gdd(d).ok
    assert d.points.M == tuple(range(args[0]))
    assert d.blocks == tuple(sorted(d.blocks))


@pytest.mark.parametrize(
    "builder,args",
    [
        (build_odd_odd, (5, 3, 6)),
        (build_even_odd, (4, 3, 5)),
        (build_dual_star, (9, 5, 6)),
        (build_dual_star, (15, 9, 6)),
        (build_pull_one, (7, 6, 5)),
        (build_pull_three, (15, 8, 5)),
        (build_odd_odd, (8, 3, 5)),
    ],
)
def test_precondition_errors(builder, args):
    with pytest.raises(PreconditionViolated):
        builder(*args)


def test_even_odd_has_no_lambda_for_4_3():
    assert all(
        classify(4, 3, lam).verdict is Verdict.REJECTED for lam in range(4, 40)
    )


def test_build_dispatch():
    d = build(7, 3, 6)
    assert len(d.blocks) == 66
    with pytest.raises(NotConstructible) as exc:
        build(9, 5, 6)
    assert exc.value.classification.verdict is Verdict.OPEN
    with pytest.raises(NotConstructible) as exc:
        build(5, 4, 4)
    assert exc.value.classification.verdict is Verdict.REJECTED


@pytest.mark.parametrize("m", [5, 11, 17])
def test_doubled_copy_cases(m):
    assert classify(m, 1, 6).method is Method.ODD_ODD
    assert verify_gdd(build(m, 1, 6)).ok


def test_star_accounting_in_pull_one():
    # each N-point meets every point of M other than the pulled one lambda times
    m, n, lam = 13, 6, 5
    d = build(m, n, lam)
    c = Counter(p for b in d.blocks for p in combinations(b, 2))
    for x in range(m):
        for y in range(m, m + n):
            assert c[(x, y)] == lam


def test_seed_determinism():
    assert build(16, 3, 9, seed=4) == build(16, 3, 9, seed=4)


constructible = (
    st.integers(3, 17)
    .flatmap(lambda m: st.tuples(st.just(m), st.integers(1, m - 1)))
    .filter(lambda mn: lambda_max(*mn) is not None and lambda_max(*mn) >= 4)
    .flatmap(lambda mn: st.tuples(st.just(mn[0]), st.just(mn[1]), st.integers(4, lambda_max(*mn))))
    .filter(lambda t: classify(*t).verdict is Verdict.CONSTRUCTIBLE)
)


@given(constructible, st.integers(0, 3))
def test_every_build_verifies(t, seed):
    m, n, lam = t
    d = build(m, n, lam, seed)
    assert verify_gdd(d).ok
    assert len(d.blocks) == d.params.block_count
