"""Brute-force box scans used as independent test oracles.

Each scan runs at ``radius`` and again at ``2 * radius`` and refuses to
answer (``BoxTooSmall``) when the two disagree.  Agreement under doubling is
not a proof: on skewed forms a minimiser can sit outside both boxes.  The
``*_radius`` helpers give box radii that provably contain every candidate,
from ``|x_i|^2 <= q(x) * (Q^-1)_ii``; callers should start from those.

Arithmetic is done on integer numpy arrays after clearing denominators, so
it shares no code with the enumeration routines it checks.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import numpy as np

from .errors import BoxTooSmall
from .lattice import QuadraticForm

_LIMIT = 2**62


@dataclass(frozen=True)
class BoxSpec:
    radius: int

    def __post_init__(self):
        if self.radius < 1:
            raise ValueError("box radius must be at least 1")


def _int_gram(form: QuadraticForm) -> np.ndarray:
    den = lcm(*(x.denominator for row in form.gram for x in row))
    return np.array([[int(x * den) for x in row] for row in form.gram], dtype=np.int64)


def _box(d: int, radius: int) -> np.ndarray:
    r = range(-radius, radius + 1)
    return np.array(list(itertools.product(r, repeat=d)), dtype=np.int64)


def _norms(X: np.ndarray, Q: np.ndarray) -> np.ndarray:
    if np.abs(X).max(initial=0) ** 2 * np.abs(Q).sum() >= _LIMIT:
        raise OverflowError("box scan would overflow int64")
    return np.einsum("ij,jk,ik->i", X, Q, X)


def _argmin_set(X, vals):
    m = vals.min()
    return m, frozenset(tuple(int(v) for v in row) for row in X[vals == m])


def certified_radius(form: QuadraticForm, norm_bound) -> int:
    """Radius of a box holding every x with q(x) <= norm_bound (float bound plus margin)."""
    G = np.array([[float(x) for x in row] for row in form.gram])
    diag = np.diag(np.linalg.inv(G)).max()
    return max(1, int(np.floor(np.sqrt(float(norm_bound) * diag))) + 1)


def _qf(G, x):
    return float(x @ G @ x)


def coset_radius(form: QuadraticForm, coset) -> int:
    # the 0/1 representative bounds the coset minimum
    G = np.array([[float(x) for x in row] for row in form.gram])
    return certified_radius(form, _qf(G, np.array([int(x) & 1 for x in coset], dtype=float)))


def facet_radius(form: QuadraticForm) -> int:
    # a facet vector t and every s competing at t/2 have q <= q(t) <= max coset minimum
    G = np.array([[float(x) for x in row] for row in form.gram])
    cs = _box(form.dim, 1)
    cs = cs[(cs >= 0).all(axis=1)].astype(float)
    return certified_radius(form, max(_qf(G, c) for c in cs))


def dual_radius(form: QuadraticForm, point) -> int:
    # a nearest point x has |x| <= |p| + |p - round(p)|
    G = np.array([[float(x) for x in row] for row in form.gram])
    p = np.array([float(Fraction(x)) for x in point])
    r = np.sqrt(_qf(G, p)) + np.sqrt(_qf(G, p - np.round(p)))
    return certified_radius(form, r * r)


def _doubling(scan, radius):
    small = scan(radius)
    big = scan(2 * radius)
    if small != big:
        raise BoxTooSmall(f"radius {radius} and {2 * radius} disagree")
    return small


def brute_shortest_in_coset(form: QuadraticForm, coset, box: BoxSpec):
    """Exhaustive ``(min_norm, minimizers)`` over ``coset + 2Z^d`` inside the box."""
    c = np.array([int(x) & 1 for x in coset], dtype=np.int64)
    if not c.any():
        raise ValueError("zero parity class")
    Q = _int_gram(form)
    den = lcm(*(x.denominator for row in form.gram for x in row))

    def scan(r):
        X = _box(form.dim, r)
        X = X[((X - c) % 2 == 0).all(axis=1)]
        m, pts = _argmin_set(X, _norms(X, Q))
        return Fraction(int(m), den), pts

    return _doubling(scan, box.radius)


def brute_voronoi_facets(form: QuadraticForm, box: BoxSpec) -> frozenset:
    """Lattice vectors whose bisector inequality supports a facet.

    The inequality for ``t`` is kept iff it is an equality at the witness
    ``t/2`` while every other scanned inequality is strict there.  A Voronoi
    facet is symmetric about ``t/2``, so this witness is in its relative
    interior whenever the facet exists.
    """
    if form.dim > 4:
        raise ValueError("brute_voronoi_facets is limited to d <= 4")
    Q = _int_gram(form)

    units = _box(form.dim, 1)
    units = units[(units >= 0).all(axis=1)]
    bound = _norms(units, Q).max()

    def scan(r):
        X = _box(form.dim, r)
        qs = _norms(X, Q)
        # t and any s with |s - t/2| <= |t/2| satisfy q(s) <= q(t) <= bound
        keep = qs <= bound
        X, qs = X[keep], qs[keep]
        XQ = X @ Q
        out = set()
        for i in range(len(X)):
            if not X[i].any():
                continue
            # |t/2 - s|^2 - |t/2|^2 = q(s) - t.Q.s: zero at s = 0 and s = t, positive elsewhere
            row = qs - X @ XQ[i]
            if np.count_nonzero(row <= 0) == 2 and row.min() == 0:
                out.add(tuple(int(v) for v in X[i]))
        return frozenset(out)

    return _doubling(scan, box.radius)


def brute_dual_cell(form: QuadraticForm, point, box: BoxSpec) -> frozenset:
    """Lattice points nearest to ``point`` by exhaustive scan of the box."""
    if form.dim > 4:
        raise ValueError("brute_dual_cell is limited to d <= 4")
    Q = _int_gram(form)
    b = [Fraction(x) for x in point]
    den = lcm(*(x.denominator for x in b))
    B = np.array([int(x * den) for x in b], dtype=np.int64)

    def scan(r):
        X = _box(form.dim, r)
        _, pts = _argmin_set(X, _norms(B[None, :] - den * X, Q))
        return pts

    return _doubling(scan, box.radius)


def brute_with_growing_box(fn, *args, start: int = 2, max_radius: int = 16):
    """Call ``fn(*args, BoxSpec(r))`` for r = start, 2*start, ... until stable."""
    r = start
    while True:
        try:
            return fn(*args, BoxSpec(r))
        except BoxTooSmall:
            r *= 2
            if r > max_radius:
                raise
