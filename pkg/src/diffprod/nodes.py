"""Node sets, difference products, and the alternating fraction sums.

Every node carries a signed difference product A_i = prod_{j != i}(a_i - a_j).
With the nodes sorted ascending the products alternate in sign, the largest
node's product being positive.  The central fact implemented here: the sum
of a_i^n / A_i vanishes for every 0 <= n <= m-2 and equals the complete
homogeneous value h_{n-m+1} from n = m-1 onward.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm, prod
from typing import Sequence

from .exactpoly import poly_derivative, poly_eval, poly_from_roots
from .symmetric import elementary_all, homogeneous_via_elementary


class EmptyNodeSet(ValueError):
    """Raised when a node set would contain no nodes."""


class DuplicateNode(ValueError):
    """Raised when two nodes coincide (difference products would vanish)."""

    def __init__(self, value):
        super().__init__(f"duplicate node {value}")
        self.value = value


class NegativeExponent(ValueError):
    """Raised when a power-sum exponent is negative."""


class EmptyInput(ValueError):
    """Raised when an operation needs at least one fraction."""


@dataclass(frozen=True)
class NodeSet:
    """Strictly ascending tuple of distinct rationals."""

    values: tuple

    @property
    def m(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class FractionRow:
    node: Fraction
    signed_denominator: Fraction
    magnitude: Fraction
    sign: int
    numerator: Fraction


@dataclass(frozen=True)
class FractionTable:
    """Display form of the sum: alternating signs over unsigned denominators."""

    rows: tuple
    common_numerators: tuple
    common_denominator: int


def nodeset_new(values: Sequence) -> NodeSet:
    """Validate, canonicalize (sort ascending), and freeze a node list."""
    vals = sorted(Fraction(v) for v in values)
    if not vals:
        raise EmptyNodeSet("node set must contain at least one value")
    for a, b in zip(vals, vals[1:]):
        if a == b:
            raise DuplicateNode(a)
    return NodeSet(tuple(vals))


def diff_products(ns: NodeSet) -> list[Fraction]:
    """Signed products A_i = prod_{j != i}(a_i - a_j); [1] for a singleton."""
    vals = ns.values
    return [
        prod((a - b for j, b in enumerate(vals) if j != i), start=Fraction(1))
        for i, a in enumerate(vals)
    ]


def diff_products_via_derivative(ns: NodeSet) -> list[Fraction]:
    """Same products obtained as w'(a_i) for w = prod(z - a_j)."""
    w1 = poly_derivative(poly_from_roots(ns.values))
    return [poly_eval(w1, a) for a in ns.values]


def _check_exponent(n: int) -> None:
    if n < 0:
        raise NegativeExponent(f"exponent must be nonnegative, got {n}")


def euler_sum(ns: NodeSet, n: int) -> Fraction:
    """Exact value of sum a_i^n / A_i (with 0**0 = 1)."""
    _check_exponent(n)
    products = diff_products(ns)
    return sum(
        (a**n / A for a, A in zip(ns.values, products)), Fraction(0)
    )


def expected_euler_sum(ns: NodeSet, n: int) -> Fraction:
    """Closed form of euler_sum: 0 for n <= m-2, else h_{n-m+1}."""
    _check_exponent(n)
    m = ns.m
    if n <= m - 2:
        return Fraction(0)
    k = n - m + 1
    h = homogeneous_via_elementary(elementary_all(ns, m), k)
    return h[k]


def common_denominator_form(fractions: Sequence) -> tuple[list[int], int]:
    """Put fractions over the lcm of their denominators.

    Returns (numerators, denominator) with sum(numerators)/denominator equal
    to the sum of the inputs.
    """
    fracs = [Fraction(f) for f in fractions]
    if not fracs:
        raise EmptyInput("need at least one fraction")
    den = lcm(*(f.denominator for f in fracs))
    nums = [f.numerator * (den // f.denominator) for f in fracs]
    return nums, den


def alternating_display(ns: NodeSet, n: int) -> FractionTable:
    """Render the sum with unsigned denominators and signs +, -, +, -, ...

    Ordered by node ascending, starting with + at the smallest node.  For
    even m this is the global negation of the true-sign sum; either way the
    total is unchanged when it is zero.  Each row also carries the true
    signed product.
    """
    _check_exponent(n)
    products = diff_products(ns)
    rows = []
    displayed = []
    for i, (a, A) in enumerate(zip(ns.values, products)):
        sign = 1 if i % 2 == 0 else -1
        numerator = a**n
        rows.append(
            FractionRow(
                node=a,
                signed_denominator=A,
                magnitude=abs(A),
                sign=sign,
                numerator=numerator,
            )
        )
        displayed.append(sign * numerator / abs(A))
    nums, den = common_denominator_form(displayed)
    return FractionTable(tuple(rows), tuple(nums), den)
