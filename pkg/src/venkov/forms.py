"""Form files and the named-lattice Gram generator.

Form file grammar: the first non-comment line holds the dimension d, then d
lines of d rationals (``p/q`` or integers) separated by whitespace.  Lines
starting with ``#`` and blank lines are skipped.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from pathlib import Path

from .errors import ParseError, UnsupportedDimension
from .exact import ldl_decompose
from .lattice import MAX_DIM, MIN_DIM, QuadraticForm


@dataclass(frozen=True)
class FormFile:
    form_id: str
    dim: int
    gram: tuple
    path: str | None = None

    @property
    def form(self) -> QuadraticForm:
        return QuadraticForm(self.gram)


def _rational(tok: str, line: int, col: int) -> Fraction:
    try:
        if "/" in tok:
            p, q = tok.split("/")
            return Fraction(int(p), int(q))
        return Fraction(int(tok))
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad rational {tok!r}", line, col) from None


def parse_form_text(text: str, form_id: str = "form", path: str | None = None) -> FormFile:
    lines = []
    for n, raw in enumerate(text.splitlines(), 1):
        s = raw.strip()
        if s and not s.startswith("#"):
            lines.append((n, raw))
    if not lines:
        raise ParseError("empty form file", 1)
    n0, first = lines[0]
    try:
        d = int(first.strip())
    except ValueError:
        raise ParseError(f"expected the dimension, got {first.strip()!r}", n0, 1) from None
    if not MIN_DIM <= d <= MAX_DIM:
        raise UnsupportedDimension(f"dimension {d} not in [{MIN_DIM}, {MAX_DIM}]")
    rows = []
    for n, raw in lines[1:]:
        toks = [_rational(m.group(), n, m.start() + 1) for m in re.finditer(r"\S+", raw)]
        if len(toks) != d:
            raise ParseError(f"expected {d} entries, found {len(toks)}", n)
        rows.append(tuple(toks))
    if len(rows) < d:
        last = lines[-1][0]
        raise ParseError(f"missing row {len(rows) + 1} of {d}", last + 1)
    if len(rows) > d:
        raise ParseError(f"extra row after the {d}x{d} matrix", lines[d + 1][0])
    gram = tuple(rows)
    ldl_decompose(gram)
    return FormFile(form_id, d, gram, path)


def read_form_file(path) -> FormFile:
    p = Path(path)
    return parse_form_text(p.read_text(), p.stem, str(p))


def format_form(gram, comment: str | None = None) -> str:
    out = []
    if comment:
        out.append(f"# {comment}")
    out.append(str(len(gram)))
    for row in gram:
        out.append(" ".join(str(Fraction(x)) for x in row))
    return "\n".join(out) + "\n"


def _cartan_a(d):
    return [[2 if i == j else -1 if abs(i - j) == 1 else 0 for j in range(d)] for i in range(d)]


def _cartan_d(d):
    # chain 0-1-...-(d-2) plus node d-1 attached to d-3
    G = [[0] * d for _ in range(d)]
    for i in range(d):
        G[i][i] = 2
    for i in range(d - 2):
        G[i][i + 1] = G[i + 1][i] = -1
    G[d - 3][d - 1] = G[d - 1][d - 3] = -1
    return G


def _integral_inverse(G):
    d = len(G)
    M = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(d)] for i, row in enumerate(G)]
    for c in range(d):
        p = next(i for i in range(c, d) if M[i][c])
        M[c], M[p] = M[p], M[c]
        piv = M[c][c]
        M[c] = [x / piv for x in M[c]]
        for i in range(d):
            if i != c and M[i][c]:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[c])]
    inv = [row[d:] for row in M]
    den = lcm(*(x.denominator for row in inv for x in row))
    return [[int(x * den) for x in row] for row in inv]


NAMED = ("Z", "A", "Astar", "D", "Dstar")


def named_gram(name: str, d: int) -> list[list[int]]:
    """Integral Gram matrix of Z^d, A_d, A_d*, D_d or D_d* (scaled to integers)."""
    if not MIN_DIM <= d <= MAX_DIM:
        raise UnsupportedDimension(f"dimension {d} not in [{MIN_DIM}, {MAX_DIM}]")
    if name == "Z":
        return [[int(i == j) for j in range(d)] for i in range(d)]
    if name == "A":
        return _cartan_a(d)
    if name == "Astar":
        return [[d if i == j else -1 for j in range(d)] for i in range(d)]
    if name in ("D", "Dstar"):
        if d < 3:
            raise UnsupportedDimension("D_d needs d >= 3")
        G = _cartan_d(d)
        return G if name == "D" else _integral_inverse(G)
    raise ValueError(f"unknown lattice {name!r}; choose from {', '.join(NAMED)}")


def named_form_file(name: str, d: int) -> FormFile:
    gram = tuple(tuple(Fraction(x) for x in row) for row in named_gram(name, d))
    return FormFile(f"{name}{d}", d, gram)
