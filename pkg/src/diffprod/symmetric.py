"""Elementary symmetric values, power sums, and complete homogeneous values.

Conventions: e-lists and h-lists are 0-indexed with e[0] = h[0] = 1, so
e[k] is the sum of all k-fold products of distinct nodes and h[k] the sum
of all degree-k monomials with repetition.  Power-sum lists hold
[p_1, ..., p_kmax] (there is no useful p_0 here).

Two independent recurrences compute h, and a direct multiset enumeration
serves as an oracle against both.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement
from math import prod
from typing import TYPE_CHECKING, Sequence

from .exactpoly import poly_from_roots

if TYPE_CHECKING:
    from .nodes import NodeSet


def elementary_all(ns: "NodeSet", kmax: int) -> list[Fraction]:
    """e[0..kmax] read off the coefficients of prod(z - a_i).

    The coefficient of z^(m-k) is (-1)^k e_k; e_k = 0 for k > m.
    """
    coeffs = poly_from_roots(ns.values)
    m = len(ns.values)
    e = []
    for k in range(kmax + 1):
        if k <= m:
            e.append((-1) ** k * coeffs[m - k])
        else:
            e.append(Fraction(0))
    return e


def power_sums(ns: "NodeSet", kmax: int) -> list[Fraction]:
    """[p_1, ..., p_kmax] with p_k the sum of k-th powers of the nodes."""
    if kmax < 1:
        raise ValueError("kmax must be >= 1")
    return [sum((a**k for a in ns.values), Fraction(0)) for k in range(1, kmax + 1)]


def homogeneous_via_elementary(e: Sequence, kmax: int) -> list[Fraction]:
    """h[0..kmax] from the alternating recurrence on elementary values.

    h_k = e_1 h_{k-1} - e_2 h_{k-2} + e_3 h_{k-3} - ...
    Entries of e beyond the end of the list are treated as zero.
    """
    h = [Fraction(1)]
    for k in range(1, kmax + 1):
        acc = Fraction(0)
        for j in range(1, k + 1):
            if j < len(e):
                acc += (-1) ** (j - 1) * e[j] * h[k - j]
        h.append(acc)
    return h


def homogeneous_via_power_sums(p: Sequence, kmax: int) -> list[Fraction]:
    """h[0..kmax] from power sums: h_k = (1/k) * sum_j p_j h_{k-j}.

    `p` holds [p_1, ..., p_kmax] as produced by power_sums.
    """
    h = [Fraction(1)]
    for k in range(1, kmax + 1):
        acc = sum((p[j - 1] * h[k - j] for j in range(1, k + 1)), Fraction(0))
        h.append(acc / k)
    return h


def homogeneous_brute_force(ns: "NodeSet", k: int) -> Fraction:
    """Sum of all degree-k monomials, enumerated multiset by multiset.

    Cost C(m+k-1, k); intended as an oracle for small m and k, and kept
    deliberately independent of both recurrences.
    """
    return sum(
        (prod(combo, start=Fraction(1))
         for combo in combinations_with_replacement(ns.values, k)),
        Fraction(0),
    )


def newton_power_from_elementary(e: Sequence, kmax: int) -> list[Fraction]:
    """[p_1, ..., p_kmax] recovered from elementary values by Newton's identities."""
    if kmax < 1:
        raise ValueError("kmax must be >= 1")
    p: list[Fraction] = []
    for k in range(1, kmax + 1):
        acc = Fraction(0)
        for j in range(1, k):
            if j < len(e):
                acc += (-1) ** (j - 1) * e[j] * p[k - j - 1]
        ek = e[k] if k < len(e) else Fraction(0)
        acc += (-1) ** (k - 1) * k * ek
        p.append(acc)
    return p
