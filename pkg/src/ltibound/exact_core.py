"""Exact integer scalars, dense matrices and univariate polynomials.

Python's ``int`` already is an arbitrary-precision integer, so scalars are
plain ints throughout the package. This module adds the immutable matrix and
polynomial carriers and the bit-size measure used for complexity accounting.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction, complex]


def bitsize(a: int) -> int:
    """Bit size of an integer: ``ceil(log2(|a| + 1)) + 1``.

    Equivalently the smallest ``b`` with ``-2**(b-1) + 1 <= a <= 2**(b-1) - 1``.
    """
    return abs(a).bit_length() + 1


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix stored as a tuple of row tuples."""

    rows: tuple[tuple[int, ...], ...]

    def __init__(self, rows: Iterable[Iterable[int]]):
        data = tuple(tuple(int(v) for v in row) for row in rows)
        if not data or not data[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(data[0])
        if any(len(row) != width for row in data):
            raise ValueError("ragged matrix rows")
        object.__setattr__(self, "rows", data)

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, m: int, n: int | None = None) -> IntMatrix:
        return cls([[0] * (m if n is None else n) for _ in range(m)])

    @classmethod
    def diag(cls, values: Sequence[int]) -> IntMatrix:
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def block_diag(cls, blocks: Sequence[IntMatrix]) -> IntMatrix:
        n = sum(b.nrows for b in blocks)
        out = [[0] * n for _ in range(n)]
        off = 0
        for b in blocks:
            if not b.is_square:
                raise ValueError("blocks must be square")
            for i, row in enumerate(b.rows):
                out[off + i][off:off + b.ncols] = row
            off += b.nrows
        return cls(out)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def entries(self) -> list[int]:
        """Entries in row-major order."""
        return [v for row in self.rows for v in row]

    def vec(self) -> list[int]:
        """Column-stacking vectorization."""
        return [self.rows[i][j] for j in range(self.ncols) for i in range(self.nrows)]

    def bitsize(self) -> int:
        return sum(bitsize(v) for v in self.entries())

    def max_entry_bits(self) -> int:
        return max(bitsize(v) for v in self.entries())

    def is_zero(self) -> bool:
        return not any(self.entries())

    def transpose(self) -> IntMatrix:
        return IntMatrix(zip(*self.rows))

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> IntMatrix:
        return IntMatrix([[self.rows[i][j] for j in cols] for i in rows])

    def with_column(self, j: int, column: Sequence[int]) -> IntMatrix:
        """Copy with column ``j`` replaced (Cramer's rule helper)."""
        out = [list(row) for row in self.rows]
        for i, v in enumerate(column):
            out[i][j] = v
        return IntMatrix(out)

    def __add__(self, other: IntMatrix) -> IntMatrix:
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return IntMatrix(
            [a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)
        )

    def __neg__(self) -> IntMatrix:
        return IntMatrix([-v for v in row] for row in self.rows)

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        return self + (-other)

    def scale(self, c: int) -> IntMatrix:
        return IntMatrix([c * v for v in row] for row in self.rows)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other.rows))
        return IntMatrix(
            [sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.rows
        )

    def apply(self, x: Sequence[int]) -> list[int]:
        """Matrix-vector product."""
        if len(x) != self.ncols:
            raise ValueError("dimension mismatch")
        return [sum(a * b for a, b in zip(row, x)) for row in self.rows]

    def __repr__(self) -> str:
        return f"IntMatrix({[list(r) for r in self.rows]})"


@dataclass(frozen=True)
class RatMatrix:
    """Rational matrix ``numerator / denominator`` with a positive denominator."""

    numerator: IntMatrix
    denominator: int = 1

    def __post_init__(self):
        if self.denominator <= 0:
            raise ValueError("denominator must be strictly positive")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], denominator: int = 1) -> RatMatrix:
        return cls(IntMatrix(rows), denominator)

    @property
    def shape(self) -> tuple[int, int]:
        return self.numerator.shape

    @property
    def is_square(self) -> bool:
        return self.numerator.is_square

    def bitsize(self) -> int:
        return self.numerator.bitsize() + bitsize(self.denominator)

    def entry(self, i: int, j: int) -> Fraction:
        return Fraction(self.numerator[i, j], self.denominator)


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    cs = tuple(int(c) for c in coeffs)
    k = 0
    while k < len(cs) and cs[k] == 0:
        k += 1
    return cs[k:]


@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial with coefficients in descending degree order.

    The zero polynomial is the empty coefficient tuple; test it with
    :attr:`is_zero`. Its degree is ``-inf`` so that degree comparisons behave.
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _strip(coeffs))

    @classmethod
    def zero(cls) -> IntPoly:
        return cls(())

    @classmethod
    def constant(cls, c: int) -> IntPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> IntPoly:
        return cls((c,) + (0,) * degree)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    @property
    def leading(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[0]

    def ascending(self) -> list[int]:
        return list(reversed(self.coeffs))

    def _padded(self, length: int) -> list[int]:
        return [0] * (length - len(self.coeffs)) + list(self.coeffs)

    def __add__(self, other: IntPoly) -> IntPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(a + b for a, b in zip(self._padded(n), other._padded(n)))

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other: IntPoly) -> IntPoly:
        return self + (-other)

    def __mul__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            return IntPoly(other * c for c in self.coeffs)
        if self.is_zero or other.is_zero:
            return IntPoly.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPoly:
        out = IntPoly.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def derivative(self) -> IntPoly:
        d = len(self.coeffs) - 1
        return IntPoly(c * (d - k) for k, c in enumerate(self.coeffs[:-1]))

    def __call__(self, x: Number) -> Number:
        acc: Number = 0
        for c in self.coeffs:
            acc = acc * x + c
        return acc

    def max_coeff_bits(self) -> int:
        return max((bitsize(c) for c in self.coeffs), default=1)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        d = len(self.coeffs) - 1
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            e = d - k
            mag = abs(c)
            body = "" if mag == 1 and e else str(mag)
            if e:
                body += "x" if e == 1 else f"x^{e}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        head_sign, head = terms[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"


def poly_derivative(p: IntPoly) -> IntPoly:
    """Formal derivative; constants and the zero polynomial map to zero."""
    return p.derivative()


def poly_eval_matrix(p: IntPoly, A: IntMatrix) -> IntMatrix:
    """Evaluate ``p(A)`` exactly by Horner's scheme over matrices."""
    if not A.is_square:
        raise ValueError("poly_eval_matrix needs a square matrix")
    n = A.nrows
    if p.is_zero:
        return IntMatrix.zeros(n)
    eye = IntMatrix.identity(n)
    acc = eye.scale(p.coeffs[0])
    for c in p.coeffs[1:]:
        acc = acc @ A + eye.scale(c)
    return acc


def matrix_powers(A: IntMatrix, top: int) -> list[IntMatrix]:
    """``[A^0, A^1, ..., A^top]`` by iterated multiplication."""
    if not A.is_square:
        raise ValueError("matrix powers need a square matrix")
    powers = [IntMatrix.identity(A.nrows)]
    for _ in range(top):
        powers.append(powers[-1] @ A)
    return powers
