"""End-to-end decisions for continuous-time and discrete-time boundedness."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any, Optional

from .exact_core import IntPoly, RatMatrix
from .kernel import KernelVerdict, SignChainReport, has_boundedness_property
from .minpoly import ScaledMinimalPolynomial, minimal_polynomial
from .moebius import MoebiusResult, moebius_transform


@dataclass(frozen=True)
class DecisionReport:
    """Verdict plus every intermediate artifact that justifies it.

    ``timings`` (seconds per stage) is excluded from equality so that two runs
    on the same input compare equal.
    """

    bounded: bool
    mode: str
    minimal_poly: ScaledMinimalPolynomial
    scaled_poly: IntPoly
    kernel: KernelVerdict
    moebius: Optional[MoebiusResult] = None
    denominator: int = 1
    bit_stats: dict[str, int] = field(default_factory=dict)
    timings: dict[str, float] = field(default_factory=dict, compare=False)

    @property
    def verdict(self) -> str:
        return "YES" if self.bounded else "NO"

    def as_dict(self, include_timings: bool = False) -> dict[str, Any]:
        """Trace document with a fixed key order."""
        doc: dict[str, Any] = {
            "verdict": self.verdict,
            "mode": self.mode,
            "denominator": self.denominator,
            "denominator_used": self.mode == "discrete",
            "minimal_polynomial": list(self.minimal_poly.coeffs),
            "scaled_polynomial": list(self.scaled_poly.coeffs),
        }
        if self.moebius is not None:
            doc["moebius"] = {
                "P": list(self.moebius.P.coeffs),
                "delta": self.moebius.delta,
                "output": list(self.moebius.output.coeffs),
            }
        doc["kernel"] = kernel_dict(self.kernel)
        doc["bit_stats"] = dict(self.bit_stats)
        if include_timings:
            doc["timings"] = {k: round(v, 6) for k, v in self.timings.items()}
        return doc


def kernel_dict(verdict: KernelVerdict) -> dict[str, Any]:
    return {
        "bounded": verdict.bounded,
        "reason": verdict.reason,
        "phase1": chain_dict(verdict.phase1),
        "p_ext0": None if verdict.p_ext0 is None else list(verdict.p_ext0.coeffs),
        "ext": chain_dict(verdict.ext),
    }


def chain_dict(rep: Optional[SignChainReport]) -> Optional[dict[str, Any]]:
    if rep is None:
        return None
    return {
        "status": rep.status.value,
        "m": rep.m,
        "leading_signs": list(rep.leading_signs),
        "minors": list(rep.minors),
        "probes": list(rep.probes),
    }


def discrete_polynomial(mp: ScaledMinimalPolynomial, q: int) -> IntPoly:
    """Clear denominators in the minimal polynomial of ``B / q``.

    Coefficient of ``x^(d-l)`` is ``e_l * q^(d-l)``.
    """
    d = mp.degree
    return IntPoly(e * q ** (d - ell) for ell, e in enumerate(mp.coeffs))


def _check_square(A: RatMatrix) -> None:
    if not A.is_square:
        raise ValueError(f"system matrix must be square, got {A.shape}")


def decide_continuous(A: RatMatrix) -> DecisionReport:
    """Is ``sup_t ||exp(A t)||`` finite? The denominator only rescales time."""
    _check_square(A)
    t0 = time.perf_counter()
    mp = minimal_polynomial(A.numerator)
    t1 = time.perf_counter()
    p = mp.as_poly()
    verdict = has_boundedness_property(p)
    t2 = time.perf_counter()
    return DecisionReport(
        bounded=verdict.bounded,
        mode="continuous",
        minimal_poly=mp,
        scaled_poly=p,
        kernel=verdict,
        denominator=A.denominator,
        bit_stats={
            "input": A.bitsize(),
            "minimal_polynomial": mp.max_bits,
            "kernel": verdict.evidence_bits,
        },
        timings={"minimal_polynomial": t1 - t0, "kernel": t2 - t1},
    )


def decide_discrete(A: RatMatrix) -> DecisionReport:
    """Is ``sup_t ||A^t||`` finite over nonnegative integer ``t``?"""
    _check_square(A)
    t0 = time.perf_counter()
    mp = minimal_polynomial(A.numerator)
    t1 = time.perf_counter()
    pdisc = discrete_polynomial(mp, A.denominator)
    mob = moebius_transform(pdisc)
    t2 = time.perf_counter()
    verdict = has_boundedness_property(mob.output)
    t3 = time.perf_counter()
    return DecisionReport(
        bounded=verdict.bounded,
        mode="discrete",
        minimal_poly=mp,
        scaled_poly=pdisc,
        kernel=verdict,
        moebius=mob,
        denominator=A.denominator,
        bit_stats={
            "input": A.bitsize(),
            "minimal_polynomial": mp.max_bits,
            "moebius": mob.P.max_coeff_bits(),
            "kernel": verdict.evidence_bits,
        },
        timings={"minimal_polynomial": t1 - t0, "moebius": t2 - t1, "kernel": t3 - t2},
    )
