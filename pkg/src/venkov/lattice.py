"""Lattice point enumeration on Z^d under a positive definite quadratic form."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor
from typing import Sequence

from .errors import DimensionMismatch, UnsupportedDimension
from .exact import ldl_decompose

MIN_DIM, MAX_DIM = 2, 6

LatticeVector = tuple  # tuple of ints
ParityClass = tuple  # tuple of 0/1 ints


@dataclass(frozen=True)
class QuadraticForm:
    """Symmetric positive definite rational Gram matrix on Z^d.

    Construction validates symmetry and definiteness through the LDL^T
    factorisation, which is cached for the enumeration routines.
    """

    gram: tuple
    ldl: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        gram = tuple(tuple(Fraction(x) for x in row) for row in self.gram)
        if not MIN_DIM <= len(gram) <= MAX_DIM:
            raise UnsupportedDimension(f"dimension {len(gram)} not in [{MIN_DIM}, {MAX_DIM}]")
        object.__setattr__(self, "gram", gram)
        L, D = ldl_decompose(gram)
        object.__setattr__(self, "ldl", (tuple(map(tuple, L)), tuple(D)))

    @property
    def dim(self) -> int:
        return len(self.gram)

    def inner(self, x, y) -> Fraction:
        return sum(xi * gij * yj for xi, row in zip(x, self.gram) for gij, yj in zip(row, y))

    def apply(self, x) -> tuple:
        return tuple(sum(g * xi for g, xi in zip(row, x)) for row in self.gram)


def q_norm(form: QuadraticForm, x: Sequence) -> Fraction:
    if len(x) != form.dim:
        raise DimensionMismatch(f"vector of length {len(x)} for a form of dimension {form.dim}")
    return form.inner(x, x)


def parity(v: Sequence[int]) -> ParityClass:
    return tuple(int(x) & 1 for x in v)


def lex_positive(v: Sequence[int]) -> tuple:
    """The member of {v, -v} whose first nonzero coordinate is positive."""
    v = tuple(v)
    for x in v:
        if x:
            return v if x > 0 else tuple(-y for y in v)
    return v


def closest_lattice_points(form: QuadraticForm, target: Sequence):
    """All integer points minimising ``q_norm(target - t)``.

    Returns ``(min_dist2, minimizers)`` with minimizers sorted.  Search is a
    depth-first enumeration over the LDL^T levels; the radius starts at the
    distance of the rounded target and only shrinks, so it is complete.
    """
    d = form.dim
    if len(target) != d:
        raise DimensionMismatch(f"target of length {len(target)} for a form of dimension {d}")
    L, D = form.ldl
    b = [Fraction(x) for x in target]
    start = [round(x) for x in b]
    best = [q_norm(form, [s - x for s, x in zip(start, b)])]
    found: list[tuple] = []
    t = [0] * d
    diff = [Fraction(0)] * d

    def level(i: int, partial: Fraction) -> None:
        c = b[i] - sum(L[j][i] * diff[j] for j in range(i + 1, d))
        Di = D[i]
        lo = floor(c)
        for k0, step in ((lo, -1), (lo + 1, 1)):
            k = k0
            while True:
                y = k - c
                val = partial + Di * y * y
                if val > best[0]:
                    break
                t[i] = k
                diff[i] = k - b[i]
                if i == 0:
                    if val < best[0]:
                        best[0] = val
                        found.clear()
                    found.append(tuple(t))
                else:
                    level(i - 1, val)
                k += step

    level(d - 1, Fraction(0))
    return best[0], tuple(sorted(found))


def shortest_vectors_in_coset(form: QuadraticForm, coset: ParityClass):
    """Minimal-norm vectors of ``coset + 2 Z^d`` for a nonzero parity class."""
    c = tuple(int(x) & 1 for x in coset)
    if len(c) != form.dim:
        raise DimensionMismatch("parity class length differs from the form dimension")
    if not any(c):
        raise ValueError("the zero parity class has no positive minimum")
    # |c + 2w|^2 = 4 |w - (-c/2)|^2
    dist, ws = closest_lattice_points(form, [Fraction(-x, 2) for x in c])
    vs = tuple(sorted(tuple(ci + 2 * wi for ci, wi in zip(c, w)) for w in ws))
    return 4 * dist, vs


def relevant_vectors(form: QuadraticForm) -> list[LatticeVector]:
    """Voronoi-relevant vectors, one lexicographically positive member per pair.

    A vector is relevant iff it and its negative are the only minimisers of
    its parity coset; the result is sorted lexicographically.
    """
    out = []
    for c in itertools.product((0, 1), repeat=form.dim):
        if not any(c):
            continue
        _, vs = shortest_vectors_in_coset(form, c)
        if len(vs) == 2:
            out.append(lex_positive(vs[0]))
    out.sort()
    return out
