"""Arithmetic feasibility for GDD(m, n; 3, lambda).

Everything here is a pure function of integers.  Every comparison that
involves a quotient is done with :class:`fractions.Fraction` so boundary
cases never depend on rounding.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor

from .decomp import NoFeasibleSplit, split_across_copies, split_with_doubled_copy

LAMBDA1 = 3


class Condition(str, enum.Enum):
    NC1 = "NC1"  # 3 | lambda*m*n
    NC2 = "NC2"  # both vertex degrees even
    NC3 = "NC3"  # enough non-crossing triangles


class Verdict(str, enum.Enum):
    REJECTED = "Rejected"
    CONSTRUCTIBLE = "Constructible"
    OPEN = "Open"


class Method(str, enum.Enum):
    ODD_ODD = "OddOdd"
    EVEN_ODD = "EvenOdd"
    DUAL_STAR = "DualStar"
    PULL_ONE = "PullOne"
    PULL_THREE = "PullThree"


class OpenTag(str, enum.Enum):
    """Which known exception family an unresolved triple falls into."""

    # n odd
    LAMBDA_MAX = "LambdaMaxCase"
    LAMBDA_MAX_MINUS_2 = "LambdaMaxMinus2Case"
    # n even, m = 1, 5 (mod 6)
    EVEN_N_LAMBDA_MAX = "EvenNLambdaMaxCase"
    EVEN_N_LAMBDA_MAX_MINUS_2 = "EvenNLambdaMaxMinus2Case"
    SMALL_N_LARGE_LAMBDA = "SmallNLargeLambda"
    # n even, m = 3 (mod 6)
    TOP_TWO_LAMBDAS = "TopTwoLambdasCase"
    LAMBDA_MAX_MINUS_4_MID_N = "LambdaMaxMinus4MidN"
    LAMBDA_MAX_MINUS_4_SPECIAL_PAIR = "LambdaMaxMinus4SpecialPair"
    SMALL_N_LAMBDA_ABOVE_N = "SmallNLambdaAboveN"
    # Not explained by any published exception; should never be produced.
    UNEXPLAINED = "Unexplained"


class ResidueConstraint(str, enum.Enum):
    ODD = "lambda odd"
    EVEN = "lambda even"
    ZERO_MOD_6 = "lambda = 0 (mod 6)"
    THREE_MOD_6 = "lambda = 3 (mod 6)"
    NONE_ALLOWED = "none allowed"

    def allows(self, lam: int) -> bool:
        if self is ResidueConstraint.ODD:
            return lam % 2 == 1
        if self is ResidueConstraint.EVEN:
            return lam % 2 == 0
        if self is ResidueConstraint.ZERO_MOD_6:
            return lam % 6 == 0
        if self is ResidueConstraint.THREE_MOD_6:
            return lam % 6 == 3
        return False


class OutOfScope(ValueError):
    """Parameters outside m > n >= 1, lambda >= 4."""


@dataclass(frozen=True)
class DesignParams:
    m: int
    n: int
    lambda2: int
    lambda1: int = field(default=LAMBDA1, init=False)

    def __post_init__(self):
        for name in ("m", "n", "lambda2"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise ValueError(f"{name} must be a positive integer, got {value!r}")

    @property
    def residues(self) -> tuple[int, int, int]:
        return self.m % 6, self.n % 6, self.lambda2 % 6

    @property
    def block_count(self) -> Fraction:
        m, n, lam = self.m, self.n, self.lambda2
        return Fraction(3 * m * (m - 1) + 3 * n * (n - 1) + 2 * lam * m * n, 6)

    def __iter__(self):
        return iter((self.m, self.n, self.lambda2))


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    violated: frozenset = frozenset()
    method: Method | None = None
    open_tag: OpenTag | None = None

    def __post_init__(self):
        if self.verdict is Verdict.REJECTED:
            ok = bool(self.violated) and self.method is None and self.open_tag is None
        elif self.verdict is Verdict.CONSTRUCTIBLE:
            ok = not self.violated and self.method is not None and self.open_tag is None
        else:
            ok = not self.violated and self.method is None and self.open_tag is not None
        if not ok:
            raise ValueError(f"inconsistent classification detail for {self.verdict}")

    @property
    def detail(self) -> str:
        if self.verdict is Verdict.REJECTED:
            return ",".join(sorted(c.value for c in self.violated))
        if self.verdict is Verdict.CONSTRUCTIBLE:
            return self.method.value
        return self.open_tag.value

    def __str__(self):
        if self.verdict is Verdict.REJECTED:
            return f"Rejected{{{self.detail}}}"
        return f"{self.verdict.value}({self.detail})"


def _params(p, n=None, lam=None) -> DesignParams:
    if isinstance(p, DesignParams):
        return p
    return DesignParams(p, n, lam)


def nc3_bound(m: int, n: int) -> Fraction:
    """Largest admissible lambda/3, i.e. (m-1)/n + (n-1)/m."""
    return Fraction(m - 1, n) + Fraction(n - 1, m)


def check_necessary(p, n=None, lam=None) -> frozenset:
    """Return the set of violated necessary conditions (empty when all hold).

    Accepts either a :class:`DesignParams` or three integers.
    """
    p = _params(p, n, lam)
    m, n, lam = p.m, p.n, p.lambda2
    bad = set()
    if (lam * m * n) % 3:
        bad.add(Condition.NC1)
    if (n - 1 + lam * m) % 2 or (m - 1 + lam * n) % 2:
        bad.add(Condition.NC2)
    if Fraction(lam, 3) > nc3_bound(m, n):
        bad.add(Condition.NC3)
    return frozenset(bad)


def in_feasible_set(p, n=None, lam=None) -> bool:
    """Membership in S: divisibility and parity hold (NC3 is ignored)."""
    bad = check_necessary(p, n, lam)
    return Condition.NC1 not in bad and Condition.NC2 not in bad


def _residue_class(r: int) -> int:
    # collapse {1,5} and {2,4} as in the published table
    return {0: 0, 1: 1, 5: 1, 2: 2, 4: 2, 3: 3}[r]


_RESIDUE_TABLE = {
    (0, 0): ResidueConstraint.NONE_ALLOWED,
    (0, 1): ResidueConstraint.ODD,
    (0, 2): ResidueConstraint.NONE_ALLOWED,
    (0, 3): ResidueConstraint.ODD,
    (1, 0): ResidueConstraint.ODD,
    (1, 1): ResidueConstraint.ZERO_MOD_6,
    (1, 2): ResidueConstraint.THREE_MOD_6,
    (1, 3): ResidueConstraint.EVEN,
    (2, 0): ResidueConstraint.NONE_ALLOWED,
    (2, 1): ResidueConstraint.THREE_MOD_6,
    (2, 2): ResidueConstraint.NONE_ALLOWED,
    (2, 3): ResidueConstraint.ODD,
    (3, 0): ResidueConstraint.ODD,
    (3, 1): ResidueConstraint.EVEN,
    (3, 2): ResidueConstraint.ODD,
    (3, 3): ResidueConstraint.EVEN,
}


def residue_constraint(m_mod_6: int, n_mod_6: int) -> ResidueConstraint:
    if not (0 <= m_mod_6 < 6 and 0 <= n_mod_6 < 6):
        raise ValueError("residues must lie in 0..5")
    return _RESIDUE_TABLE[_residue_class(m_mod_6), _residue_class(n_mod_6)]


def lambda_max(m: int, n: int) -> int | None:
    """Largest lambda with (m, n, lambda) in S that also satisfies NC3."""
    if not m > n >= 1:
        raise ValueError("lambda_max needs m > n >= 1")
    top = floor(3 * nc3_bound(m, n))
    for lam in range(top, 0, -1):
        if in_feasible_set(m, n, lam) and Condition.NC3 not in check_necessary(m, n, lam):
            return lam
    return None


def gamma_set(m: int, n: int) -> frozenset:
    """In-S lambdas strictly above floor(3(m-1)/n) that still satisfy NC3."""
    if not m > n >= 1:
        raise ValueError("gamma_set needs m > n >= 1")
    low = (3 * (m - 1)) // n
    high = 3 * nc3_bound(m, n)
    return frozenset(
        lam for lam in range(low + 1, floor(high) + 1) if in_feasible_set(m, n, lam)
    )


# ---------------------------------------------------------------------------
# construction preconditions


def _splits_ok(*requests) -> bool:
    for v, total, with_factor in requests:
        if total < 0:
            return False
        try:
            split_across_copies(v, total, with_factor)
        except NoFeasibleSplit:
            try:
                split_with_doubled_copy(v, total, with_factor)
            except NoFeasibleSplit:
                return False
    return True


def cycle_budget(method: Method, m: int, n: int, lam: int) -> list[tuple[int, int, bool]]:
    """The (v, total_cycles, with_factor) decompositions a method needs.

    Each entry is one threefold complete graph 3K_v split over its three copies.
    """
    if method is Method.ODD_ODD:
        return [(m, n * lam // 2, False)]
    if method is Method.EVEN_ODD:
        return [(m, (n * lam - 3) // 2, True)]
    if method is Method.DUAL_STAR:
        inner = lam - 2
        if m % 2:
            side_m = (m, n * inner // 2, False)
        else:
            side_m = (m, (n * inner - 3) // 2, True)
        return [side_m, (n, m, False)]
    if method is Method.PULL_ONE:
        return [(m - 1, n * lam // 2, True), (n, (lam - 3) // 2, True)]
    if method is Method.PULL_THREE:
        return [(m - 3, n * lam // 2 + 3, True), (n, (3 * lam - 3) // 2, True)]
    raise ValueError(method)


def precondition_failure(method: Method, m: int, n: int, lam: int) -> str | None:
    """First violated precondition of a construction, or None.

    Split feasibility of the cycle budgets is not checked here; membership
    in S is assumed to have been checked already.
    """
    if not m > n >= 1:
        return f"need m > n >= 1, got m={m}, n={n}"
    bound = 3 * (m - 1) // n
    if method is Method.ODD_ODD:
        checks = [
            (m % 2 == 1 and n % 2 == 1, "m and n must both be odd"),
            (lam % 2 == 0, "lambda must be even"),
            (lam <= bound, f"lambda = {lam} exceeds floor(3(m-1)/n) = {bound}"),
        ]
    elif method is Method.EVEN_ODD:
        checks = [
            (m % 2 == 0 and n % 2 == 1, "m must be even and n odd"),
            (lam % 2 == 1 and n * lam >= 3, "lambda must be odd"),
            (lam <= bound, f"lambda = {lam} exceeds floor(3(m-1)/n) = {bound}"),
        ]
    elif method is Method.DUAL_STAR:
        checks = [
            (n % 2 == 1 and n >= 3, "n must be odd and at least 3"),
            (lam >= 4, "lambda must be at least 4"),
            ((lam - 2) % 2 == (0 if m % 2 else 1), "lambda - 2 has the wrong parity for m"),
            (lam - 2 <= bound, f"lambda - 2 = {lam - 2} exceeds floor(3(m-1)/n) = {bound}"),
            (2 * m <= 3 * (n - 1), f"m = {m} exceeds 3(n-1)/2 = {Fraction(3 * (n - 1), 2)}"),
        ]
    elif method is Method.PULL_ONE:
        low = 3 * (m - 3) // n
        checks = [
            (n % 2 == 0, "n must be even"),
            (m % 6 in (1, 5), "m must be 1 or 5 (mod 6)"),
            (lam % 2 == 1 and lam >= 3, "lambda must be odd and at least 3"),
            (lam <= low, f"lambda = {lam} exceeds floor(3(m-3)/n) = {low}"),
            (lam <= 3 * (n - 1), f"lambda = {lam} exceeds 3(n-1) = {3 * (n - 1)}"),
        ]
    elif method is Method.PULL_THREE:
        low = 3 * (m - 7) // n
        checks = [
            (n % 2 == 0, "n must be even"),
            (m % 6 == 3, "m must be 3 (mod 6)"),
            (lam % 2 == 1 and lam >= 3, "lambda must be odd and at least 3"),
            (lam <= low, f"lambda = {lam} exceeds floor(3(m-7)/n) = {low}"),
            (lam <= n - 1, f"lambda = {lam} exceeds n-1 = {n - 1}"),
        ]
    else:
        raise ValueError(method)
    return next((why for ok, why in checks if not ok), None)


def method_applies(method: Method, m: int, n: int, lam: int) -> bool:
    """True when the construction's preconditions hold and its cycle budgets split."""
    if precondition_failure(method, m, n, lam) is not None:
        return False
    return _splits_ok(*cycle_budget(method, m, n, lam))


METHOD_ORDER = (
    Method.ODD_ODD,
    Method.EVEN_ODD,
    Method.DUAL_STAR,
    Method.PULL_ONE,
    Method.PULL_THREE,
)


def _open_tag(m: int, n: int, lam: int) -> OpenTag:
    top = lambda_max(m, n)
    if n % 2 == 1:
        if lam == top:
            return OpenTag.LAMBDA_MAX
        ratio = Fraction(3 * (n - 1), m)
        if (
            lam == top - 2
            and (m % 6 in (0, 3) or n % 6 == 3)
            and 1 <= ratio < 2
        ):
            return OpenTag.LAMBDA_MAX_MINUS_2
    elif m % 6 in (1, 5):
        if lam == top:
            return OpenTag.EVEN_N_LAMBDA_MAX
        # n >= sqrt(m) + 1  <=>  (n - 1)^2 >= m
        if lam == top - 2 and n % 6 == 0 and (n - 1) ** 2 >= m:
            return OpenTag.EVEN_N_LAMBDA_MAX_MINUS_2
        if n * n <= m and lam > 3 * (n - 1):
            return OpenTag.SMALL_N_LARGE_LAMBDA
    elif m % 6 == 3:
        if lam in (top, top - 2):
            return OpenTag.TOP_TWO_LAMBDAS
        # n >= sqrt(3m) + 2  <=>  (n - 2)^2 >= 3m
        if lam == top - 4 and (n - 2) ** 2 >= 3 * m and 6 <= n <= 16:
            return OpenTag.LAMBDA_MAX_MINUS_4_MID_N
        if lam == top - 4 and (m, n) in ((21, 6), (27, 6)):
            return OpenTag.LAMBDA_MAX_MINUS_4_SPECIAL_PAIR
        # n <= sqrt(3m) + 1  <=>  (n - 1)^2 <= 3m
        if (n - 1) ** 2 <= 3 * m and lam > n - 1:
            return OpenTag.SMALL_N_LAMBDA_ABOVE_N
    return OpenTag.UNEXPLAINED


def classify(p, n=None, lam=None) -> Classification:
    """Classify (m, n, lambda) as Rejected, Constructible(method) or Open(tag).

    Raises :class:`OutOfScope` unless m > n and lambda >= 4.
    """
    p = _params(p, n, lam)
    m, n, lam = p.m, p.n, p.lambda2
    if m <= n:
        raise OutOfScope(f"need m > n, got m={m}, n={n}")
    if lam < 4:
        raise OutOfScope(f"need lambda >= 4, got {lam}")
    bad = check_necessary(p)
    if bad:
        return Classification(Verdict.REJECTED, violated=bad)
    for method in METHOD_ORDER:
        if method_applies(method, m, n, lam):
            return Classification(Verdict.CONSTRUCTIBLE, method=method)
    return Classification(Verdict.OPEN, open_tag=_open_tag(m, n, lam))
