import json
import random

import pytest

from ltibound.exact_core import IntMatrix, IntPoly, RatMatrix
from ltibound.pipeline import decide_continuous, decide_discrete, discrete_polynomial
from ltibound.minpoly import ScaledMinimalPolynomial
from ltibound.testkit import companion, unimodular_pair


def R(rows, q=1):
    return RatMatrix.from_rows(rows, q)


@pytest.mark.parametrize(
    "A, bounded",
    [
        (R([[0, 0], [0, 0]]), True),
        (R([[0, 1], [0, 0]]), False),
        (R([[0, 1], [-1, 0]]), True),
        (R([[-1, 0], [0, -2]]), True),
        (R([[0, 1], [1, 0]]), False),
    ],
)
def test_continuous_examples(A, bounded):
    assert decide_continuous(A).bounded is bounded


@pytest.mark.parametrize(
    "A, bounded",
    [
        (R([[0, 1], [-1, 0]]), True),
        (R([[1, 1], [0, 1]]), False),
        (R([[1]]), True),
        (R([[1]], 2), True),
    ],
)
def test_discrete_examples(A, bounded):
    assert decide_discrete(A).bounded is bounded


def test_discrete_details():
    rep = decide_discrete(R([[1]], 2))
    assert rep.scaled_poly == IntPoly((2, -1))
    rep = decide_discrete(R([[1, 1], [0, 1]]))
    assert rep.scaled_poly == IntPoly((1, -2, 1)) and rep.moebius.delta == 2
    assert decide_continuous(R([[-1, 0], [0, -2]])).minimal_poly.coeffs == (1, 3, 2)


def test_discrete_polynomial_scaling():
    mp = ScaledMinimalPolynomial((2, -3, 5), 0)
    assert discrete_polynomial(mp, 7) == IntPoly((2 * 49, -3 * 7, 5))


def test_non_square_rejected():
    with pytest.raises(ValueError):
        decide_continuous(R([[1, 2]]))
    with pytest.raises(ValueError):
        decide_discrete(R([[1, 2]]))


def _monic(roots_poly):
    return companion(roots_poly)


def test_cross_mode_left_half_plane():
    rng = random.Random(71)
    for i in range(200):
        p = IntPoly((1,))
        for _ in range(rng.randint(1, 4)):
            if rng.random() < 0.5:
                p = p * IntPoly((1, rng.randint(1, 5)))
            else:
                al, be = rng.randint(1, 3), rng.randint(1, 3)
                p = p * IntPoly((1, 2 * al, al * al + be * be))
        unstable = i % 2 == 1
        if unstable:
            p = p * IntPoly((1, -rng.randint(1, 4)))
        A = RatMatrix(companion(p), 1)
        assert decide_continuous(A).bounded is not unstable


def test_similarity_invariance():
    rng = random.Random(72)
    for _ in range(60):
        n = rng.randint(1, 5)
        B = IntMatrix([[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)])
        U, Uinv = unimodular_pair(rng.randint(0, 10 ** 6), n)
        q = rng.randint(1, 4)
        for decide in (decide_continuous, decide_discrete):
            assert decide(RatMatrix(U @ B @ Uinv, q)).bounded is decide(RatMatrix(B, q)).bounded


def test_denominator_invariance_continuous():
    rng = random.Random(73)
    for _ in range(60):
        n = rng.randint(1, 4)
        B = IntMatrix([[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)])
        a, b = rng.randint(1, 50), rng.randint(1, 50)
        assert decide_continuous(RatMatrix(B, a)).bounded is decide_continuous(RatMatrix(B, b)).bounded


def test_scalar_discrete_exhaustive():
    for q in range(1, 11):
        for a in range(-10, 11):
            assert decide_discrete(R([[a]], q)).bounded is (abs(a) <= q), (a, q)


def test_report_is_deterministic():
    A = R([[0, 1, 0], [0, 0, 1], [-1, -1, -1]], 3)
    for decide in (decide_continuous, decide_discrete):
        r1, r2 = decide(A), decide(A)
        assert r1 == r2
        assert json.dumps(r1.as_dict()) == json.dumps(r2.as_dict())
        assert list(r1.as_dict())[:2] == ["verdict", "mode"]


def test_report_carries_evidence_on_rejection():
    rep = decide_continuous(R([[0, 1], [0, 0]]))
    doc = rep.as_dict()
    assert doc["verdict"] == "NO" and doc["kernel"]["reason"]
    assert doc["kernel"]["phase1"] is not None
    assert doc["denominator_used"] is False
