"""Minimal polynomial of an integer matrix by solving annihilation systems.

For ``d = 1, 2, ...`` the equation ``A^d + c_1 A^(d-1) + ... + c_d I = 0`` is
vectorized into ``M c = N`` and handed to the exact solver; the first feasible
degree gives the minimal polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .exact_core import IntMatrix, IntPoly, matrix_powers, poly_eval_matrix
from .linear_solver import RationalSolution, solve


class MinimalPolynomialError(RuntimeError):
    """Internal consistency failure (e.g. Cayley-Hamilton degree infeasible)."""


@dataclass(frozen=True)
class ScaledMinimalPolynomial:
    """``e_0 x^d + e_1 x^(d-1) + ... + e_d`` with ``e_0 > 0``.

    Dividing by ``e_0`` gives the monic minimal polynomial.
    """

    coeffs: tuple[int, ...]
    max_bits: int = 0

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def e0(self) -> int:
        return self.coeffs[0]

    def as_poly(self) -> IntPoly:
        return IntPoly(self.coeffs)

    def monic(self) -> list[Fraction]:
        return [Fraction(c, self.coeffs[0]) for c in self.coeffs]


def annihilation_system(powers: Sequence[IntMatrix], d: int) -> tuple[IntMatrix, list[int]]:
    """``(M, N)`` with ``M = [vec A^(d-1), ..., vec A^0]`` and ``N = -vec A^d``."""
    cols = [powers[d - 1 - k].vec() for k in range(d)]
    M = IntMatrix(zip(*cols))
    N = [-v for v in powers[d].vec()]
    return M, N


def solve_degree(A: IntMatrix, d: int, powers: Sequence[IntMatrix] | None = None) -> Optional[RationalSolution]:
    """Try to annihilate ``A`` with a monic polynomial of degree exactly ``d``."""
    if powers is None:
        powers = matrix_powers(A, d)
    M, N = annihilation_system(powers, d)
    return solve(M, N)


def minimal_polynomial(A: IntMatrix) -> ScaledMinimalPolynomial:
    if not A.is_square:
        raise ValueError(f"minimal polynomial of a non-square {A.shape} matrix")
    n = A.nrows
    powers = matrix_powers(A, n)
    max_bits = max(P.max_entry_bits() for P in powers)

    for d in range(1, n + 1):
        sol = solve_degree(A, d, powers)
        if sol is None:
            continue
        max_bits = max(max_bits, sol.max_bits)
        coeffs = (sol.denominator,) + sol.numerators
        if coeffs[0] < 0:
            coeffs = tuple(-c for c in coeffs)
        result = ScaledMinimalPolynomial(coeffs=coeffs, max_bits=max_bits)
        if not poly_eval_matrix(result.as_poly(), A).is_zero():
            raise MinimalPolynomialError(f"degree-{d} solution does not annihilate A")
        return result
    raise MinimalPolynomialError(f"no annihilating polynomial up to degree {n}")
