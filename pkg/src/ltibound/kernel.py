"""Boundedness property of an integer polynomial via Hurwitz determinants.

A polynomial has the boundedness property when every root either has a
negative real part or is purely imaginary and simple. The decision runs two
Routh-Hurwitz style sign chains, both read off leading minors of interleaved
coefficient matrices so that no intermediate remainder polynomial (and no
rational coefficient growth) is ever materialized:

1. the chain of ``(p0, p1)`` where ``p(ix) = p0(x) + i p1(x)`` (times ``i``
   for odd degree), whose leading coefficients must alternate in sign;
2. a Sturm chain of ``(g, -g')`` for the common factor ``g`` of ``p0`` and
   ``p1`` carrying the imaginary-axis roots, which must run to full length
   with alternating signs so that all roots of ``g`` are real and simple.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

from .exact_core import IntMatrix, IntPoly
from .fraction_free import determinant


class ChainStatus(enum.Enum):
    ALL_NONZERO = "all-nonzero-minors"
    S1 = "S1"  # vanishing remainder: chain ends, common factor found
    S2 = "S2"  # degree drop larger than one: reject
    NOT_STEP_ONE = "not-step-one"  # deg p1 < deg p0 - 1 before any minor


@dataclass(frozen=True)
class HurwitzPair:
    p0: IntPoly
    p1: IntPoly
    f: int
    parity: str  # "even" or "odd": degree parity of the source polynomial


@dataclass(frozen=True)
class SignChainReport:
    """Outcome of one determinant-driven sign chain.

    ``leading_signs`` holds the signs of the leading coefficients of
    ``p_0, ..., p_m``. ``minors`` are the leading principal minors that were
    evaluated (the last one is zero unless the chain completed) and
    ``probes`` the off-diagonal minors evaluated to classify a zero.
    """

    leading_signs: tuple[int, ...]
    m: int
    status: ChainStatus
    minors: tuple[int, ...] = ()
    probes: tuple[int, ...] = ()

    @property
    def alternating(self) -> bool:
        s = self.leading_signs
        return all(a != b for a, b in zip(s, s[1:]))

    @property
    def variation_difference(self) -> int:
        """``V(+inf) - V(-inf)`` for a chain whose degrees drop one at a time."""
        changes = sum(1 for a, b in zip(self.leading_signs, self.leading_signs[1:]) if a != b)
        return 2 * changes - self.m


@dataclass(frozen=True)
class KernelVerdict:
    bounded: bool
    phase1: Optional[SignChainReport]
    ext: Optional[SignChainReport] = None
    p_ext0: Optional[IntPoly] = None
    reason: str = ""
    pair: Optional[HurwitzPair] = field(default=None, compare=False)

    @property
    def evidence_bits(self) -> int:
        values = []
        for rep in (self.phase1, self.ext):
            if rep is not None:
                values.extend(rep.minors)
                values.extend(rep.probes)
        if self.p_ext0 is not None:
            values.extend(self.p_ext0.coeffs)
        return max((abs(v).bit_length() + 1 for v in values), default=1)


def _sign(v: int) -> int:
    return (v > 0) - (v < 0)


def _sigma(k: int) -> int:
    return -1 if k % 4 == 2 else 1


def decompose(p: IntPoly) -> HurwitzPair:
    """Split ``p`` into real polynomials along the imaginary axis.

    Even degree: ``p(ix) = p0(x) + i p1(x)``. Odd degree:
    ``i p(ix) = p0(x) + i p1(x)``.
    """
    if p.is_zero or p.degree < 1:
        raise ValueError("decompose needs a polynomial of degree >= 1")
    d = int(p.degree)
    shift = d % 2  # extra factor i for odd degree
    real = [0] * (d + 1)
    imag = [0] * (d + 1)
    for k, c in enumerate(p.coeffs):
        e = (d - k + shift) % 4
        if e == 0:
            real[k] = c
        elif e == 1:
            imag[k] = c
        elif e == 2:
            real[k] = -c
        else:
            imag[k] = -c
    return HurwitzPair(
        p0=IntPoly(real), p1=IntPoly(imag), f=d // 2, parity="odd" if shift else "even"
    )


def _gap_coeffs(p: IntPoly) -> list[int]:
    """Coefficients of ``x^deg, x^(deg-2), ...``; the others must vanish."""
    cs = p.coeffs
    if any(cs[1::2]):
        raise ValueError(f"{p} is not of every-other-power shape")
    return list(cs[0::2])


def hurwitz_matrix(pair: HurwitzPair) -> IntMatrix:
    """Interleaved ``(d+1) x (d+1)`` matrix of the ``p0`` and ``p1`` coefficients.

    Row 0 holds ``p0`` from column 0; afterwards odd rows hold ``p1`` and even
    rows ``p0``, each pair shifted one column further right.
    """
    p0, p1 = pair.p0, pair.p1
    if p0.is_zero or p1.is_zero or p1.degree != p0.degree - 1:
        raise ValueError("hurwitz_matrix needs deg p1 == deg p0 - 1")
    d = int(p0.degree)
    a0 = _gap_coeffs(p0)
    a1 = _gap_coeffs(p1)
    M = [[0] * (d + 1) for _ in range(d + 1)]
    M[0][: len(a0)] = a0
    for r in range(1, d + 1):
        src, start = (a1, (r + 1) // 2) if r % 2 else (a0, r // 2)
        M[r][start:start + len(src)] = src
    return IntMatrix(M)


def _probe_minor(M: IntMatrix, k: int, ell: int) -> int:
    """``det M[0:k+1, [0..k-1] + [k+ell]]``."""
    return determinant(M.submatrix(range(k + 1), list(range(k)) + [k + ell]))


def chain_signs(M: IntMatrix) -> SignChainReport:
    """Leading-coefficient signs of the remainder chain encoded by ``M``.

    The product of the leading coefficients of ``p_0 .. p_k`` equals
    ``sigma_k`` times the ``(k+1)``-th leading principal minor, with
    ``sigma_k = -1`` exactly when ``k = 2 mod 4``.
    """
    d = M.nrows - 1
    minors: list[int] = []
    signs: list[int] = []
    prev_sign = 1
    for k in range(d + 1):
        delta = determinant(M.submatrix(range(k + 1), range(k + 1)))
        minors.append(delta)
        if delta == 0:
            probes = tuple(_probe_minor(M, k, ell) for ell in range(1, (d - k) // 2 + 1))
            status = ChainStatus.S2 if any(probes) else ChainStatus.S1
            return SignChainReport(tuple(signs), k - 1, status, tuple(minors), probes)
        cum_sign = _sigma(k) * _sign(delta)
        signs.append(cum_sign * prev_sign)
        prev_sign = cum_sign
    return SignChainReport(tuple(signs), d, ChainStatus.ALL_NONZERO, tuple(minors))


def extract_pm(M: IntMatrix, m: int) -> IntPoly:
    """Positive multiple ``|lc(p_0) ... lc(p_(m-1))| * p_m`` with integer coefficients."""
    d = M.nrows - 1
    if m == 0:
        cum_sign = 1
    else:
        lead = determinant(M.submatrix(range(m), range(m)))
        cum_sign = _sigma(m - 1) * _sign(lead)
    deg = d - m
    dense = [0] * (deg + 1)
    for ell in range(deg // 2 + 1):
        dense[2 * ell] = cum_sign * _sigma(m) * _probe_minor(M, m, ell)
    return IntPoly(dense)


def _sturm_phase(g: IntPoly) -> SignChainReport:
    pair = HurwitzPair(p0=g, p1=-g.derivative(), f=int(g.degree) // 2, parity="ext")
    return chain_signs(hurwitz_matrix(pair))


def has_boundedness_property(p: IntPoly) -> KernelVerdict:
    """Decide whether every root of ``p`` has negative real part or is simple and imaginary."""
    if p.is_zero:
        raise ValueError("the zero polynomial has no boundedness verdict")
    if p.degree == 0:
        return KernelVerdict(True, None, reason="constant polynomial has no roots")

    d = int(p.degree)
    pair = decompose(p)

    if pair.p1.is_zero:
        # m = 0: the first chain is trivial and p0 itself carries every root
        phase1 = SignChainReport((_sign(pair.p0.leading),), 0, ChainStatus.S1, (pair.p0.leading,))
        p_ext0 = pair.p0
    elif pair.p1.degree < d - 1:
        phase1 = SignChainReport((_sign(pair.p0.leading),), 0, ChainStatus.NOT_STEP_ONE)
        return KernelVerdict(False, phase1, reason="deg p1 < deg p0 - 1", pair=pair)
    else:
        M = hurwitz_matrix(pair)
        phase1 = chain_signs(M)
        if phase1.status is ChainStatus.S2:
            return KernelVerdict(False, phase1, reason="remainder chain skips a degree", pair=pair)
        if not phase1.alternating:
            return KernelVerdict(False, phase1, reason="root with positive real part", pair=pair)
        if phase1.status is ChainStatus.ALL_NONZERO:
            return KernelVerdict(True, phase1, reason="all roots in the open left half-plane", pair=pair)
        p_ext0 = extract_pm(M, phase1.m)

    if p_ext0.degree == 0:
        return KernelVerdict(True, phase1, p_ext0=p_ext0, reason="no imaginary-axis factor", pair=pair)

    ext = _sturm_phase(p_ext0)
    if ext.status is ChainStatus.S2:
        reason = "Sturm chain skips a degree"
    elif ext.status is ChainStatus.S1:
        reason = "common factor has repeated roots"
    elif not ext.alternating:
        reason = "common factor has non-real roots"
    else:
        reason = "stable part plus simple imaginary roots"
    bounded = ext.status is ChainStatus.ALL_NONZERO and ext.alternating
    return KernelVerdict(bounded, phase1, ext=ext, p_ext0=p_ext0, reason=reason, pair=pair)
