"""Exact BCH-recursion factorizations in filtered algebras with Rota-Baxter-type operators."""
from .core import FilteredElement, bch, bernoulli, commutator, exp, inverse, iterate_fixed_point, log
from .errors import (
    AlgebraError, DegreeError, DegreeOverflow, FlagError, MembershipError, NonConvergence,
    NotCharacter, NotLieError, PoleOverflow, TargetMismatch, TruncationMismatch,
)
from .free_operated import FreeOperated, OperatedPolynomial, formal_p, lie_bracket
from .operators import OperatorDescriptor, double_exp, double_product, modified_operator
from .chi import ChiVariant, chi, chi_inverse, factorize_exponential, magnus_omega, uniformize
from .spitzer import SpitzerProblem, solve_left, solve_right
from .brackets import format_lie

__version__ = "0.1.0"

__all__ = [
    "FilteredElement", "bch", "bernoulli", "commutator", "exp", "inverse", "iterate_fixed_point",
    "log", "AlgebraError", "DegreeError", "DegreeOverflow", "FlagError", "MembershipError",
    "NonConvergence", "NotCharacter", "NotLieError", "PoleOverflow", "TargetMismatch",
    "TruncationMismatch", "FreeOperated", "OperatedPolynomial", "formal_p", "lie_bracket",
    "OperatorDescriptor", "double_exp", "double_product", "modified_operator", "ChiVariant", "chi",
    "chi_inverse", "factorize_exponential", "magnus_omega", "uniformize", "SpitzerProblem",
    "solve_left", "solve_right", "format_lie",
]
