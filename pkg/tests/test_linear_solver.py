import random
from fractions import Fraction

import pytest

from ltibound.exact_core import IntMatrix
from ltibound.linear_solver import solve
from ltibound.testkit import random_int_matrix, rref_oracle


def test_identity_system():
    sol = solve(IntMatrix.identity(2), [4, 9])
    assert sol.denominator == 1 and sol.numerators == (4, 9)


def test_diagonal_system():
    sol = solve(IntMatrix.diag([2, 3]), [4, 9])
    assert sol.denominator == 6 and sol.numerators == (12, 18)
    assert sol.as_fractions() == [2, 3]


def test_inconsistent_duplicate_rows():
    assert solve(IntMatrix([[1, 1], [1, 1]]), [1, 2]) is None


def test_zero_matrix():
    assert solve(IntMatrix.zeros(2, 2), [0, 0]).as_fractions() == [0, 0]
    assert solve(IntMatrix.zeros(2, 2), [0, 1]) is None


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        solve(IntMatrix.identity(2), [1, 2, 3])


def _substitutes(A, x, b):
    return all(sum(Fraction(a) * xi for a, xi in zip(row, x)) == bi for row, bi in zip(A.rows, b))


def test_feasibility_matches_augmented_rank():
    rng = random.Random(21)
    for _ in range(500):
        m, n = rng.randint(1, 5), rng.randint(1, 5)
        A = random_int_matrix(rng, m, n, -9, 9)
        if rng.random() < 0.5 and m > 1:
            rows = [list(r) for r in A.rows]
            rows[-1] = [a - b for a, b in zip(rows[0], rows[1 % m])]
            A = IntMatrix(rows)
        if rng.random() < 0.5:
            b = A.apply([rng.randint(-3, 3) for _ in range(n)])
        else:
            b = [rng.randint(-9, 9) for _ in range(m)]
        rank_a = rref_oracle(A.rows)[0]
        rank_ab = rref_oracle([list(r) + [bi] for r, bi in zip(A.rows, b)])[0]
        sol = solve(A, b)
        assert (sol is None) == (rank_ab > rank_a)
        if sol is not None:
            assert sol.denominator != 0
            assert _substitutes(A, sol.as_fractions(), b)


def test_unique_solution_on_full_column_rank():
    rng = random.Random(22)
    checked = 0
    while checked < 100:
        n = rng.randint(1, 4)
        m = rng.randint(n, 5)
        A = random_int_matrix(rng, m, n, -9, 9)
        rank, pivots, R = rref_oracle([list(r) for r in A.rows])
        if rank < n:
            continue
        x = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(n)]
        scale = 1
        for v in x:
            scale = scale * v.denominator
        b = [int(sum(a * v for a, v in zip(row, x)) * scale) for row in A.rows]
        sol = solve(A, b)
        assert sol.as_fractions() == [v * scale for v in x]
        checked += 1
