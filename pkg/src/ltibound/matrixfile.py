"""Plain-text matrix documents.

Grammar (``#`` starts a comment running to end of line; blank lines ignored)::

    m n q
    b11 b12 ... b1n
    ...
    bm1 bm2 ... bmn

``m``, ``n`` and ``q`` are positive decimal integers and the ``b`` entries are
signed decimal integers, all whitespace-separated. The document denotes the
rational matrix ``B / q``.
"""

from __future__ import annotations

import re
from pathlib import Path

from .exact_core import IntMatrix, RatMatrix

_INT = re.compile(r"[+-]?\d+\Z")


class MatrixFileError(ValueError):
    def __init__(self, message: str, line: int, column: int, source: str = "<input>"):
        super().__init__(f"{source}:{line}:{column}: {message}")
        self.line = line
        self.column = column


def _tokens(line: str) -> list[tuple[int, str]]:
    """``(1-based column, token)`` pairs with comments stripped."""
    body = line.split("#", 1)[0]
    return [(mt.start() + 1, mt.group()) for mt in re.finditer(r"\S+", body)]


def parse_matrix(text: str, source: str = "<input>") -> RatMatrix:
    rows: list[list[int]] = []
    header: tuple[int, int, int] | None = None
    last_line = 0
    for lineno, line in enumerate(text.splitlines(), 1):
        toks = _tokens(line)
        if not toks:
            continue
        last_line = lineno
        for col, tok in toks:
            if not _INT.match(tok):
                raise MatrixFileError(f"expected an integer, got {tok!r}", lineno, col, source)
        values = [int(tok) for _, tok in toks]
        if header is None:
            if len(values) != 3:
                raise MatrixFileError("header must be 'm n q'", lineno, toks[0][0], source)
            for (col, _), v, name in zip(toks, values, "mnq"):
                if v <= 0:
                    raise MatrixFileError(f"{name} must be positive", lineno, col, source)
            header = (values[0], values[1], values[2])
            continue
        m, n, _ = header
        if len(rows) == m:
            raise MatrixFileError(f"more than {m} rows", lineno, toks[0][0], source)
        if len(values) != n:
            col = toks[n][0] if len(values) > n else len(line.split("#", 1)[0].rstrip()) + 1
            raise MatrixFileError(f"expected {n} entries, found {len(values)}", lineno, col, source)
        rows.append(values)
    if header is None:
        raise MatrixFileError("missing header 'm n q'", max(last_line, 1), 1, source)
    if len(rows) != header[0]:
        raise MatrixFileError(
            f"expected {header[0]} rows, found {len(rows)}", last_line + 1, 1, source
        )
    return RatMatrix(IntMatrix(rows), header[2])


def read_matrix(path: str | Path) -> RatMatrix:
    path = Path(path)
    return parse_matrix(path.read_text(encoding="utf-8"), source=str(path))


def format_matrix(A: RatMatrix) -> str:
    m, n = A.shape
    lines = [f"{m} {n} {A.denominator}"]
    lines.extend(" ".join(str(v) for v in row) for row in A.numerator.rows)
    return "\n".join(lines) + "\n"
