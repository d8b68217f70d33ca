"""Reduce the unit-disk boundedness test to the half-plane one.

The map ``x -> (x + 1) / (x - 1)`` is its own inverse and sends the open unit
disk onto the open left half-plane and the unit circle (minus 1) onto the
imaginary axis. Substituting it into ``p`` and clearing ``(x - 1)^d`` gives

    P(x) = sum_l a_l (x + 1)^(d - l) (x - 1)^l

whose roots are the images of the roots of ``p`` other than 1, with the same
multiplicities. The root 1 of ``p`` is sent to infinity and shows up only as
the degree deficiency ``delta = deg p - deg P``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .exact_core import IntPoly

# x^2 has a double root on the imaginary axis, hence always fails the kernel
FAILING_POLY = IntPoly((1, 0, 0))


@dataclass(frozen=True)
class MoebiusResult:
    P: IntPoly
    delta: int
    output: IntPoly


def _binomial_powers(sign: int, d: int) -> list[list[int]]:
    """Descending coefficients of ``(x + sign)^k`` for ``k = 0..d``."""
    return [[comb(k, j) * sign**j for j in range(k + 1)] for k in range(d + 1)]


def transformed(p: IntPoly) -> IntPoly:
    d = int(p.degree)
    plus = _binomial_powers(1, d)
    minus = _binomial_powers(-1, d)
    acc = [0] * (d + 1)
    for ell, a in enumerate(p.coeffs):
        if a == 0:
            continue
        term = IntPoly(plus[d - ell]) * IntPoly(minus[ell])
        for i, c in enumerate(term.coeffs):
            acc[i] += a * c
    return IntPoly(acc)


def moebius_transform(pdisc: IntPoly) -> MoebiusResult:
    """Map ``pdisc`` to a polynomial for the half-plane kernel.

    A root at 1 of multiplicity two or more already violates the unit-disk
    property, so the output is the canonical failing polynomial. Otherwise any
    root at 1 is simple and admissible, and ``P`` alone decides.
    """
    if pdisc.is_zero or pdisc.degree < 1:
        raise ValueError("moebius_transform needs a polynomial of degree >= 1")
    P = transformed(pdisc)
    delta = int(pdisc.degree - P.degree)
    output = P if delta <= 1 else FAILING_POLY
    return MoebiusResult(P=P, delta=delta, output=output)
