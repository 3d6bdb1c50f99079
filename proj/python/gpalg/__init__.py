"""Graph products of groups and graded algebras.

Thin wrapper over the compiled core: simplicial complexes, graph-product
word problems, graded algebra dimensions, Lie dimension extraction, and
the group-algebra filtration oracle.
"""

from ._core import (
    BudgetError,
    Complex,
    InputError,
    VerificationError,
    ball_size,
    comm_generators,
    free_restricted_dim,
    gr_dim_oracle,
    hilbert_bruteforce,
    hilbert_formula,
    lie_dims,
    lyndon_words,
    p_power_axiom_check,
    quillen_check,
    restricted_lie_dims,
    substitution,
    witt_dimension,
    word_normal_form,
)

__all__ = [
    "BudgetError",
    "Complex",
    "InputError",
    "VerificationError",
    "ball_size",
    "comm_generators",
    "free_restricted_dim",
    "gr_dim_oracle",
    "hilbert_bruteforce",
    "hilbert_formula",
    "lie_dims",
    "lyndon_words",
    "p_power_axiom_check",
    "quillen_check",
    "restricted_lie_dims",
    "substitution",
    "witt_dimension",
    "word_normal_form",
]
