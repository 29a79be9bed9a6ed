"""Exact arithmetic for difference-product sums and their closed forms."""

from .exactpoly import (
    MINUS_INFINITY,
    Rational,
    degree,
    poly_add,
    poly_derivative,
    poly_divide_linear,
    poly_eval,
    poly_from_roots,
    poly_mul,
)
from .nodes import (
    DuplicateNode,
    EmptyInput,
    EmptyNodeSet,
    FractionRow,
    FractionTable,
    NegativeExponent,
    NodeSet,
    alternating_display,
    common_denominator_form,
    diff_products,
    diff_products_via_derivative,
    euler_sum,
    expected_euler_sum,
    nodeset_new,
)
from .partfrac import (
    NodeSetTooSmall,
    PartialFractionDecomposition,
    decompose,
    euler_sum_via_decomposition,
    reconstruct,
)
from .symmetric import (
    elementary_all,
    homogeneous_brute_force,
    homogeneous_via_elementary,
    homogeneous_via_power_sums,
    newton_power_from_elementary,
    power_sums,
)

__all__ = [
    "MINUS_INFINITY",
    "Rational",
    "degree",
    "poly_add",
    "poly_derivative",
    "poly_divide_linear",
    "poly_eval",
    "poly_from_roots",
    "poly_mul",
    "DuplicateNode",
    "EmptyInput",
    "EmptyNodeSet",
    "FractionRow",
    "FractionTable",
    "NegativeExponent",
    "NodeSet",
    "alternating_display",
    "common_denominator_form",
    "diff_products",
    "diff_products_via_derivative",
    "euler_sum",
    "expected_euler_sum",
    "nodeset_new",
    "NodeSetTooSmall",
    "PartialFractionDecomposition",
    "decompose",
    "euler_sum_via_decomposition",
    "reconstruct",
    "elementary_all",
    "homogeneous_brute_force",
    "homogeneous_via_elementary",
    "homogeneous_via_power_sums",
    "newton_power_from_elementary",
    "power_sums",
]

__version__ = "0.1.0"
