"""Exact, polynomial bit-complexity decisions for bounded LTI trajectories."""

from .exact_core import IntMatrix, IntPoly, RatMatrix, bitsize, poly_derivative, poly_eval_matrix
from .fraction_free import EliminationResult, determinant, eliminate
from .kernel import decompose, has_boundedness_property, hurwitz_matrix
from .linear_solver import RationalSolution, solve
from .minpoly import ScaledMinimalPolynomial, minimal_polynomial
from .moebius import MoebiusResult, moebius_transform
from .pipeline import DecisionReport, decide_continuous, decide_discrete

__version__ = "0.1.0"

__all__ = [
    "DecisionReport",
    "EliminationResult",
    "IntMatrix",
    "IntPoly",
    "MoebiusResult",
    "RatMatrix",
    "RationalSolution",
    "ScaledMinimalPolynomial",
    "bitsize",
    "decide_continuous",
    "decide_discrete",
    "decompose",
    "determinant",
    "eliminate",
    "has_boundedness_property",
    "hurwitz_matrix",
    "minimal_polynomial",
    "moebius_transform",
    "poly_derivative",
    "poly_eval_matrix",
    "solve",
]
