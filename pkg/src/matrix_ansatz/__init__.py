"""Exact Matrix Ansatz engine: rewriting, explicit matrices and tableau enumeration."""

from .algebra import Poly, RatFun, genocchi_numbers, q_factorial, q_int, var
from .ansatz import AnsatzSpec, BoundaryRules, CommutationRule, Word, bracket, normal_form, sum_bracket
from .models import build, check_relations, stable_bracket, truncated_bracket

__version__ = "0.1.0"

__all__ = [
    "AnsatzSpec", "BoundaryRules", "CommutationRule", "Poly", "RatFun", "Word", "bracket", "build",
    "check_relations", "genocchi_numbers", "normal_form", "q_factorial", "q_int", "stable_bracket",
    "sum_bracket", "truncated_bracket", "var",
]
