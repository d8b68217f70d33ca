"""Fraction-free (Bareiss) elimination over the integers.

Every intermediate value of the one-step recurrence is a minor of the input,
so entries stay polynomially bounded in the input bit size and every division
performed is exact.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact_core import IntMatrix, bitsize


class InexactDivisionError(ArithmeticError):
    """A Bareiss division left a remainder. Indicates a bug, never bad input."""


@dataclass(frozen=True)
class EliminationResult:
    """Rank decomposition returned by :func:`eliminate`.

    ``rowset`` and ``colset`` are ascending 0-based index lists and ``minor``
    is the determinant of ``A[rowset, colset]`` taken in that ascending order.
    ``parity`` is the sign relating the pivot-order minor to the ascending one,
    already folded into ``minor``. ``max_bits`` is the largest bit size seen
    among all intermediate iterates.
    """

    rank: int
    rowset: tuple[int, ...]
    colset: tuple[int, ...]
    minor: int
    parity: int
    max_bits: int


def _perm_sign(seq: list[int]) -> int:
    """Sign of the permutation sorting ``seq`` (distinct values)."""
    inversions = sum(
        1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j]
    )
    return -1 if inversions % 2 else 1


def eliminate(A: IntMatrix) -> EliminationResult:
    """Bareiss elimination with full pivoting on a possibly rectangular matrix.

    When the diagonal candidate vanishes, the remaining block is scanned in
    row-major order and the first nonzero entry is swapped into place.
    """
    m, n = A.shape
    a = [list(row) for row in A.rows]
    row_perm = list(range(m))
    col_perm = list(range(n))
    prev = 1
    rank = 0
    max_bits = max(bitsize(v) for v in A.entries())

    for k in range(min(m, n)):
        if a[k][k] == 0:
            found = next(
                ((i, j) for i in range(k, m) for j in range(k, n) if a[i][j] != 0), None
            )
            if found is None:
                break
            i, j = found
            if i != k:
                a[k], a[i] = a[i], a[k]
                row_perm[k], row_perm[i] = row_perm[i], row_perm[k]
            if j != k:
                for row in a:
                    row[k], row[j] = row[j], row[k]
                col_perm[k], col_perm[j] = col_perm[j], col_perm[k]

        pivot = a[k][k]
        pivot_row = a[k]
        for i in range(k + 1, m):
            row = a[i]
            lead = row[k]
            for j in range(k + 1, n):
                num = pivot * row[j] - lead * pivot_row[j]
                q, r = divmod(num, prev)
                if r:
                    raise InexactDivisionError(
                        f"remainder {r} dividing {num} by {prev} at step {k}"
                    )
                row[j] = q
                if q:
                    max_bits = max(max_bits, bitsize(q))
            row[k] = 0
        prev = pivot
        rank = k + 1

    rows_used = row_perm[:rank]
    cols_used = col_perm[:rank]
    parity = _perm_sign(rows_used) * _perm_sign(cols_used)
    minor = prev * parity if rank else 1
    return EliminationResult(
        rank=rank,
        rowset=tuple(sorted(rows_used)),
        colset=tuple(sorted(cols_used)),
        minor=minor,
        parity=parity,
        max_bits=max_bits,
    )


def determinant(A: IntMatrix) -> int:
    """Exact determinant of a square integer matrix."""
    if not A.is_square:
        raise ValueError(f"determinant of a non-square {A.shape} matrix")
    res = eliminate(A)
    return res.minor if res.rank == A.nrows else 0
