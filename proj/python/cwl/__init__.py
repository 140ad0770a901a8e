"""Words over Z/NZ whose matrix product is +-Id."""

from ._cwl import (
    InternalError,
    UsageError,
    VerificationFailure,
    binomial_valuation,
    canonical_form,
    classify_monomials,
    closed_form_size,
    enumerate_solutions,
    equivalent,
    euler_phi,
    factorize,
    family_word,
    is_reducible_monomial,
    is_reducible_oracle,
    is_solution,
    minimal_monomial_size,
    monomial_report,
    oplus,
    power_matrix_identity,
    quadratic_roots,
    verify,
    word_matrix,
)

__all__ = [
    "InternalError",
    "UsageError",
    "VerificationFailure",
    "binomial_valuation",
    "canonical_form",
    "classify_monomials",
    "closed_form_size",
    "enumerate_solutions",
    "equivalent",
    "euler_phi",
    "factorize",
    "family_word",
    "is_reducible_monomial",
    "is_reducible_oracle",
    "is_solution",
    "minimal_monomial_size",
    "monomial_report",
    "oplus",
    "power_matrix_identity",
    "quadratic_roots",
    "verify",
    "word_matrix",
]
