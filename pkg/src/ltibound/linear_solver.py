"""Exact solution of integer linear systems via Bareiss pivots and Cramer's rule."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .exact_core import IntMatrix
from .fraction_free import eliminate


@dataclass(frozen=True)
class RationalSolution:
    """Solution ``[x_1, ..., x_n] / x_0`` of ``A x = b`` in integer form."""

    denominator: int
    numerators: tuple[int, ...]
    max_bits: int = 0

    def as_fractions(self) -> list[Fraction]:
        return [Fraction(v, self.denominator) for v in self.numerators]


def solve(A: IntMatrix, b: Sequence[int]) -> Optional[RationalSolution]:
    """Solve ``A x = b`` exactly, or return ``None`` when the system is infeasible.

    The candidate comes from Cramer's rule on the nonsingular pivot block found
    by :func:`eliminate`; coordinates outside the pivot columns are zero. The
    candidate is substituted into every equation before it is returned, and a
    failed substitution is the infeasibility certificate.
    """
    b = [int(v) for v in b]
    if len(b) != A.nrows:
        raise ValueError(f"right-hand side has {len(b)} entries, expected {A.nrows}")

    elim = eliminate(A)
    max_bits = elim.max_bits
    x = [0] * A.ncols
    x0 = 1
    if elim.rank:
        block = A.submatrix(elim.rowset, elim.colset)
        rhs = [b[i] for i in elim.rowset]
        x0 = elim.minor
        for pos, col in enumerate(elim.colset):
            cramer = eliminate(block.with_column(pos, rhs))
            max_bits = max(max_bits, cramer.max_bits)
            x[col] = cramer.minor if cramer.rank == elim.rank else 0

    if A.apply(x) != [x0 * v for v in b]:
        return None
    return RationalSolution(denominator=x0, numerators=tuple(x), max_bits=max_bits)
