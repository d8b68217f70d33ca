import random
from fractions import Fraction

import pytest

from ltibound.exact_core import IntPoly
from ltibound.kernel import has_boundedness_property
from ltibound.moebius import moebius_transform
from ltibound.pipeline import decide_discrete
from ltibound.testkit import (
    Factor,
    RootSpec,
    expand,
    multiplicity_of_one,
    parse_spec,
    qpoly,
    qpoly_divmod,
    random_spec,
    rational_companion,
)


@pytest.mark.parametrize(
    "pdisc, P, delta, output, bounded",
    [
        ((1, 0, -1), (4, 0), 1, (4, 0), True),
        ((1, -2, 1), (4,), 2, (1, 0, 0), False),
        ((1, 0, 1), (2, 0, 2), 0, (2, 0, 2), True),
        ((1, -1), (2,), 1, (2,), True),
    ],
)
def test_worked_examples(pdisc, P, delta, output, bounded):
    res = moebius_transform(IntPoly(pdisc))
    assert (res.P, res.delta, res.output) == (IntPoly(P), delta, IntPoly(output))
    assert has_boundedness_property(res.output).bounded is bounded


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        moebius_transform(IntPoly())
    with pytest.raises(ValueError):
        moebius_transform(IntPoly((3,)))


def _root_multiplicity(poly, mu):
    q, k = qpoly(poly), 0
    while True:
        quo, rem = qpoly_divmod(q, [Fraction(1), -mu])
        if rem:
            return k
        q, k = quo, k + 1


def test_rational_roots_map_with_multiplicity():
    rng = random.Random(61)
    for _ in range(200):
        factors, used = [], set()
        for _ in range(rng.randint(1, 4)):
            c = rng.randint(1, 5)
            a = rng.randint(-9, 9)
            if Fraction(a, c) == 1 or Fraction(a, c) in used:
                continue
            used.add(Fraction(a, c))
            factors.append(Factor("linear", a=a, scale=c, mult=rng.randint(1, 3)))
        if not factors:
            continue
        pdisc = expand(RootSpec(tuple(factors)))
        P = moebius_transform(pdisc).P
        for f in factors:
            lam = Fraction(f.a, f.scale)
            mu = (lam + 1) / (lam - 1)
            assert _root_multiplicity(P, mu) == f.mult
            assert (abs(lam) < 1) == (mu < 0)
            assert (abs(lam) == 1) == (mu == 0)


def test_delta_is_multiplicity_of_one():
    rng = random.Random(62)
    for _ in range(200):
        spec = random_spec(rng, "discrete", 8)
        pdisc = expand(spec)
        assert moebius_transform(pdisc).delta == multiplicity_of_one(pdisc)


def test_end_to_end_discrete_corpus(discrete_corpus):
    assert len(discrete_corpus) >= 200
    for entry in discrete_corpus:
        pdisc = expand(entry.spec)
        assert has_boundedness_property(moebius_transform(pdisc).output).bounded is entry.discrete
        assert decide_discrete(rational_companion(pdisc)).bounded is entry.discrete, str(entry.spec)


@pytest.mark.parametrize("text, bounded", [("U L(-1)", True), ("U", True), ("U^2", False), ("U^3", False)])
def test_root_at_one_and_minus_one(text, bounded):
    assert decide_discrete(rational_companion(expand(parse_spec(text)))).bounded is bounded
