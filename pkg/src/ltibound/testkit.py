"""Independent oracles and seeded instance generators.

Nothing here calls the decision code: ground truth comes from factor lists
with known roots, determinants from Laplace expansion, rank from Fraction row
reduction, and remainder chains from rational Euclidean division.

Root specs have a compact text form used by the corpus manifests::

    L(a)        real root a          factor x - a
    L(a/c)      real root a/c        factor c x - a
    Q(al,be)    roots al +- be i     factor (x - al)^2 + be^2
    Q(al,be/c)  roots (al +- be i)/c factor (c x - al)^2 + be^2
    U           root 1               factor x - 1

each optionally followed by ``^k`` for multiplicity, separated by spaces.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .exact_core import IntMatrix, IntPoly, RatMatrix

# -- root specs -------------------------------------------------------------


@dataclass(frozen=True)
class Factor:
    kind: str  # "linear", "pair" or "one"
    a: int = 0  # real root numerator (linear) or real part numerator (pair)
    b: int = 0  # imaginary part numerator (pair only)
    scale: int = 1
    mult: int = 1

    def poly(self) -> IntPoly:
        if self.kind == "one":
            return IntPoly((1, -1))
        if self.kind == "linear":
            return IntPoly((self.scale, -self.a))
        c, al, be = self.scale, self.a, self.b
        return IntPoly((c * c, -2 * c * al, al * al + be * be))

    def root_key(self) -> tuple[Fraction, Fraction]:
        """(real part, |imaginary part|) of the root, or of the conjugate pair."""
        if self.kind == "one":
            return Fraction(1), Fraction(0)
        if self.kind == "linear":
            return Fraction(self.a, self.scale), Fraction(0)
        return Fraction(self.a, self.scale), Fraction(abs(self.b), self.scale)

    def text(self) -> str:
        if self.kind == "one":
            body = "U"
        elif self.kind == "linear":
            body = f"L({self.a})" if self.scale == 1 else f"L({self.a}/{self.scale})"
        else:
            tail = "" if self.scale == 1 else f"/{self.scale}"
            body = f"Q({self.a},{self.b}{tail})"
        return body if self.mult == 1 else f"{body}^{self.mult}"


@dataclass(frozen=True)
class RootSpec:
    factors: tuple[Factor, ...]

    def __str__(self) -> str:
        return " ".join(f.text() for f in self.factors)

    @property
    def degree(self) -> int:
        return sum(f.mult * (2 if f.kind == "pair" else 1) for f in self.factors)

    def root_multiplicities(self) -> dict[tuple[Fraction, Fraction], int]:
        out: dict[tuple[Fraction, Fraction], int] = {}
        for f in self.factors:
            re_, im = f.root_key()
            if f.kind == "pair" and im == 0:
                # degenerate pair: a double real root
                out[(re_, im)] = out.get((re_, im), 0) + 2 * f.mult
            else:
                out[(re_, im)] = out.get((re_, im), 0) + f.mult
        return out

    def continuous_truth(self) -> bool:
        """Every root has negative real part or is simple and purely imaginary."""
        for (re_, _), mult in self.root_multiplicities().items():
            if re_ > 0 or (re_ == 0 and mult > 1):
                return False
        return True

    def discrete_truth(self) -> bool:
        """Every root is inside the unit disk or simple on the unit circle."""
        for (re_, im), mult in self.root_multiplicities().items():
            mod2 = re_ * re_ + im * im
            if mod2 > 1 or (mod2 == 1 and mult > 1):
                return False
        return True


_TOKEN = re.compile(
    r"^(?:U|L\((-?\d+)(?:/(\d+))?\)|Q\((-?\d+),(-?\d+)(?:/(\d+))?\))(?:\^(\d+))?$"
)


def parse_spec(text: str) -> RootSpec:
    factors = []
    for tok in text.split():
        mt = _TOKEN.match(tok)
        if not mt:
            raise ValueError(f"bad root-spec token {tok!r}")
        la, lc, qa, qb, qc, mult = mt.groups()
        k = int(mult) if mult else 1
        if tok.startswith("U"):
            factors.append(Factor("one", mult=k))
        elif tok.startswith("L"):
            factors.append(Factor("linear", a=int(la), scale=int(lc or 1), mult=k))
        else:
            factors.append(Factor("pair", a=int(qa), b=int(qb), scale=int(qc or 1), mult=k))
    if not factors:
        raise ValueError("empty root spec")
    return RootSpec(tuple(factors))


def expand(spec: RootSpec) -> IntPoly:
    """Exact product of the factors of ``spec``."""
    if not spec.factors:
        raise ValueError("empty root spec")
    out = IntPoly.constant(1)
    for f in spec.factors:
        out = out * f.poly() ** f.mult
    return out


# -- matrices ---------------------------------------------------------------


def companion(p: IntPoly) -> IntMatrix:
    """Companion matrix of a monic polynomial (ones on the subdiagonal)."""
    if p.is_zero or p.degree < 1:
        raise ValueError("companion needs degree >= 1")
    if p.leading != 1:
        raise ValueError("companion needs a monic polynomial")
    d = int(p.degree)
    M = [[0] * d for _ in range(d)]
    for i in range(1, d):
        M[i][i - 1] = 1
    for i in range(d):
        M[i][d - 1] = -p.coeffs[d - i]
    return IntMatrix(M)


def rational_companion(p: IntPoly) -> RatMatrix:
    """Companion matrix of ``p / lc(p)`` written as ``B / q`` with ``q = |lc(p)|``."""
    if p.leading < 0:
        p = -p
    q = p.leading
    d = int(p.degree)
    M = [[0] * d for _ in range(d)]
    for i in range(1, d):
        M[i][i - 1] = q
    for i in range(d):
        M[i][d - 1] = -p.coeffs[d - i]
    return RatMatrix(IntMatrix(M), q)


def unimodular_pair(seed: int, n: int, steps: int | None = None, cap: int = 4) -> tuple[IntMatrix, IntMatrix]:
    """Seeded unimodular ``U`` together with its integer inverse.

    ``U`` is a product of row additions and row swaps; an operation is skipped
    when it would push any entry of ``U`` or its inverse beyond ``cap``.
    """
    rng = random.Random(seed)
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]
    if n == 1:
        s = rng.choice((1, -1))
        return IntMatrix([[s]]), IntMatrix([[s]])
    for _ in range(steps if steps is not None else 3 * n):
        i, j = rng.sample(range(n), 2)
        if rng.random() < 0.2:
            # swap rows i, j of U; the inverse swaps columns
            U[i], U[j] = U[j], U[i]
            for row in V:
                row[i], row[j] = row[j], row[i]
            continue
        c = rng.choice((-2, -1, 1, 2))
        # U <- E U with E = I + c e_i e_j^T; V <- V E^-1
        newU_i = [u + c * w for u, w in zip(U[i], U[j])]
        newV = [row[:] for row in V]
        for row in newV:
            row[j] -= c * row[i]
        if max(map(abs, newU_i)) > cap or max(abs(v) for row in newV for v in row) > cap:
            continue
        U[i] = newU_i
        V = newV
    return IntMatrix(U), IntMatrix(V)


def unimodular(seed: int, n: int) -> IntMatrix:
    return unimodular_pair(seed, n)[0]


def cofactor_det_oracle(A: IntMatrix) -> int:
    """Determinant by Laplace expansion along the first row (``n <= 7``)."""
    if not A.is_square:
        raise ValueError("determinant of a non-square matrix")
    if A.nrows > 7:
        raise ValueError("cofactor oracle is limited to n <= 7")

    def rec(rows: list[list[int]]) -> int:
        if len(rows) == 1:
            return rows[0][0]
        total = 0
        for j, v in enumerate(rows[0]):
            if v:
                minor = [r[:j] + r[j + 1:] for r in rows[1:]]
                total += (-1) ** j * v * rec(minor)
        return total

    return rec([list(r) for r in A.rows])


def permutation_det(A: IntMatrix) -> int:
    """Leibniz-formula determinant; second brute-force oracle for tiny matrices."""
    n = A.nrows
    total = 0
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        prod = 1
        for i, j in enumerate(perm):
            prod *= A[i, j]
        total += -prod if inv % 2 else prod
    return total


def rref_oracle(rows: Sequence[Sequence[int]]) -> tuple[int, list[int], list[list[Fraction]]]:
    """Reduced row echelon form over Fractions: ``(rank, pivot columns, rref)``."""
    R = [[Fraction(v) for v in row] for row in rows]
    m, n = len(R), len(R[0]) if R else 0
    pivots: list[int] = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if R[i][c] != 0), None)
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        lead = R[r][c]
        R[r] = [v / lead for v in R[r]]
        for i in range(m):
            if i != r and R[i][c] != 0:
                f = R[i][c]
                R[i] = [a - f * b for a, b in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return r, pivots, R


def rank_oracle(A: IntMatrix) -> int:
    return rref_oracle(A.rows)[0]


# -- rational polynomials ---------------------------------------------------

QPoly = list  # descending list of Fractions, no leading zeros; [] is zero


def qpoly(p: IntPoly | Iterable) -> QPoly:
    cs = p.coeffs if isinstance(p, IntPoly) else list(p)
    out = [Fraction(c) for c in cs]
    while out and out[0] == 0:
        out.pop(0)
    return out


def qpoly_divmod(a: QPoly, b: QPoly) -> tuple[QPoly, QPoly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(r) >= len(b) and r:
        c = r[0] / b[0]
        shift = len(r) - len(b)
        q[len(q) - 1 - shift] = c
        for i, v in enumerate(b):
            r[i] -= c * v
        assert r[0] == 0
        r.pop(0)
        while r and r[0] == 0:
            r.pop(0)
    return qpoly(q), r


def qpoly_mul(a: QPoly, b: QPoly) -> QPoly:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def qpoly_monic(a: QPoly) -> QPoly:
    return [c / a[0] for c in a] if a else []


def qpoly_gcd(a: QPoly, b: QPoly) -> QPoly:
    a, b = qpoly(a), qpoly(b)
    while b:
        a, b = b, qpoly_divmod(a, b)[1]
    return qpoly_monic(a)


def qpoly_lcm(a: QPoly, b: QPoly) -> QPoly:
    g = qpoly_gcd(a, b)
    return qpoly_monic(qpoly_divmod(qpoly_mul(a, b), g)[0])


def remainder_chain_oracle(p0: IntPoly, p1: IntPoly) -> list[QPoly]:
    """``p0, p1, p2, ...`` with ``p_(k+1) = -rem(p_(k-1), p_k)``, ending with zero."""
    if p0.is_zero:
        raise ValueError("p0 must be nonzero")
    chain = [qpoly(p0), qpoly(p1)]
    while chain[-1]:
        rem = qpoly_divmod(chain[-2], chain[-1])[1]
        chain.append([-c for c in rem])
    return chain


def multiplicity_of_one(p: IntPoly) -> int:
    """Multiplicity of the root 1 by repeated exact division by ``x - 1``."""
    q = qpoly(p)
    k = 0
    while q:
        quo, rem = qpoly_divmod(q, [Fraction(1), Fraction(-1)])
        if rem:
            break
        q, k = quo, k + 1
    return k


# -- corpora ----------------------------------------------------------------


def _pick_factor(rng: random.Random, mode: str, benign: bool) -> Factor:
    if mode == "continuous":
        kinds = ["stable_lin", "stable_lin", "zero", "imag", "imag", "stable_pair", "stable_pair"]
        kind = rng.choice(kinds if benign else kinds + ["unstable_lin", "unstable_pair"])
        if kind == "stable_lin":
            return Factor("linear", a=-rng.randint(1, 6))
        if kind == "unstable_lin":
            return Factor("linear", a=rng.randint(1, 6))
        if kind == "zero":
            return Factor("linear", a=0)
        if kind == "imag":
            return Factor("pair", a=0, b=rng.randint(1, 4))
        al = rng.randint(1, 4)
        return Factor("pair", a=-al if kind == "stable_pair" else al, b=rng.randint(1, 4))

    kinds = ["inside_lin", "inside_lin", "minus_one", "one", "zero", "circle_pair",
             "circle_pair", "inside_pair"]
    kind = rng.choice(kinds if benign else kinds + ["one", "outside_lin", "reciprocal", "outside_pair"])
    if kind == "inside_lin":
        c = rng.randint(2, 5)
        return Factor("linear", a=rng.randint(-c + 1, c - 1), scale=c)
    if kind == "outside_lin":
        return Factor("linear", a=rng.choice([-1, 1]) * rng.randint(2, 4))
    if kind == "minus_one":
        return Factor("linear", a=-1)
    if kind == "one":
        return Factor("one")
    if kind == "zero":
        return Factor("linear", a=0)
    if kind == "reciprocal":
        sign, mag = rng.choice([-1, 1]), rng.randint(2, 3)
        if rng.random() < 0.5:
            return Factor("linear", a=sign, scale=mag)
        return Factor("linear", a=sign * mag)
    if kind == "circle_pair":
        # Pythagorean triples: rational points of the unit circle
        al, be, c = rng.choice([(0, 1, 1), (3, 4, 5), (-3, 4, 5), (4, 3, 5), (-4, 3, 5),
                                (5, 12, 13), (-12, 5, 13)])
        return Factor("pair", a=al, b=be, scale=c)
    if kind == "inside_pair":
        c = rng.randint(2, 4)
        return Factor("pair", a=rng.randint(-1, 1), b=rng.randint(1, c - 1), scale=c)
    return Factor("pair", a=rng.randint(-2, 2), b=rng.randint(2, 3))


def random_spec(rng: random.Random, mode: str, max_degree: int = 10) -> RootSpec:
    factors: list[Factor] = []
    degree = 0
    target = rng.randint(1, max_degree)
    # half the corpus avoids obviously bad factors so that bounded cases and
    # the imaginary-axis / unit-circle branches are well represented
    benign = rng.random() < 0.5
    while degree < target:
        f = _pick_factor(rng, mode, benign)
        fdeg = 2 if f.kind == "pair" else 1
        room = (max_degree - degree) // fdeg
        if room < 1:
            if fdeg == 2:
                continue
            break
        mult = min(rng.choice([1, 1, 1, 1, 2] if benign else [1, 1, 2, 2, 3]), room)
        factors.append(Factor(f.kind, f.a, f.b, f.scale, mult))
        degree += fdeg * mult
    return RootSpec(tuple(factors))


@dataclass(frozen=True)
class CorpusEntry:
    seed: int
    spec: RootSpec
    continuous: bool
    discrete: bool

    def line(self) -> str:
        yn = {True: "YES", False: "NO"}
        return f"{self.seed}\t{self.spec}\t{yn[self.continuous]}\t{yn[self.discrete]}"


def make_corpus(mode: str, count: int, base_seed: int, max_degree: int = 10,
                extra: Sequence[str] = ()) -> list[CorpusEntry]:
    """Seeded corpus; ``extra`` specs are prepended with seed -1."""
    out = []
    for text in extra:
        spec = parse_spec(text)
        out.append(CorpusEntry(-1, spec, spec.continuous_truth(), spec.discrete_truth()))
    for i in range(count):
        seed = base_seed + i
        spec = random_spec(random.Random(seed), mode, max_degree)
        out.append(CorpusEntry(seed, spec, spec.continuous_truth(), spec.discrete_truth()))
    return out


def write_manifest(path: Path, entries: Iterable[CorpusEntry], header: str = "") -> None:
    lines = [f"# {h}" for h in header.splitlines()] if header else []
    lines.append("# seed\tspec\tcontinuous\tdiscrete")
    lines.extend(e.line() for e in entries)
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def read_manifest(path: Path) -> Iterator[CorpusEntry]:
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 4:
            raise ValueError(f"{path}:{lineno}: expected 4 tab-separated fields")
        seed, spec, cont, disc = fields
        yield CorpusEntry(int(seed), parse_spec(spec), cont == "YES", disc == "YES")


def random_int_matrix(rng: random.Random, m: int, n: int, lo: int, hi: int) -> IntMatrix:
    return IntMatrix([[rng.randint(lo, hi) for _ in range(n)] for _ in range(m)])


if __name__ == "__main__":  # pragma: no cover - corpus regeneration
    import sys

    target = Path(sys.argv[1] if len(sys.argv) > 1 else "tests/data")
    worked = ["Q(-1,1)", "Q(0,1)", "Q(0,1)^2", "U", "L(-1) Q(0,1)"]
    write_manifest(
        target / "continuous_corpus.tsv",
        make_corpus("continuous", 320, 1000, extra=worked),
        header="continuous-time kernel corpus; regenerate with python -m ltibound.testkit",
    )
    collisions = ["U L(-1)", "U^2", "Q(0,1)", "U", "L(1/2)", "U^3", "U L(-1)^2", "U Q(3,4/5)"]
    write_manifest(
        target / "discrete_corpus.tsv",
        make_corpus("discrete", 220, 5000, max_degree=8, extra=collisions),
        header="discrete-time corpus; regenerate with python -m ltibound.testkit",
    )
