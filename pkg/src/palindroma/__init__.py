"""Exact-arithmetic toolkit for palindromic automorphisms of free groups:
words, exponent-sum matrices, parity-subgroup membership, reducible
conjugacy decisions, centralizer lattices, and z-class distinguishers."""

from .abelianize import MembershipReport, lift, membership_report, psi
from .matrices import (
    CharPoly,
    IntMatrix,
    OrderResult,
    char_poly,
    det,
    eigen_classify,
    identity,
    inverse_unimodular,
    is_in_hatGL,
    matrix,
    mul,
    order,
    parse_matrix,
    random_hat_element,
    unit_eigenvalue,
)
from .words import (
    EndoMap,
    Letter,
    Word,
    apply,
    compose,
    concat,
    gen_Aij,
    gen_sigma,
    gen_tau,
    invert,
    is_palindrome,
    is_palindromic,
    parse_word,
    reduce,
    word,
)

__all__ = [
    "CharPoly",
    "EndoMap",
    "IntMatrix",
    "Letter",
    "MembershipReport",
    "OrderResult",
    "Word",
    "apply",
    "char_poly",
    "compose",
    "concat",
    "det",
    "eigen_classify",
    "gen_Aij",
    "gen_sigma",
    "gen_tau",
    "identity",
    "inverse_unimodular",
    "invert",
    "is_in_hatGL",
    "is_palindrome",
    "is_palindromic",
    "lift",
    "matrix",
    "membership_report",
    "mul",
    "order",
    "parse_matrix",
    "parse_word",
    "psi",
    "random_hat_element",
    "reduce",
    "unit_eigenvalue",
    "word",
]

__version__ = "0.1.0"
