"""The Voronoi cell of the origin as an exact polytope.

The cell is built from its facet inequalities; vertices come from a
double-description run on the homogenised cone, and faces are vertex-index
bitmasks so that intersections and inclusion tests are single integer ops.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, gcd, lcm
from typing import Sequence

from .errors import PipelineAssertion, UnboundedPolytope
from .exact import affine_dimension, det, rank, solve_linear
from .lattice import QuadraticForm, q_norm


@dataclass(frozen=True)
class HalfSpace:
    """``2 t^T Q x <= t^T Q t``: the side of the bisector of 0 and ``t`` containing 0."""

    normal: tuple  # lattice vector t
    coeffs: tuple  # 2 Q t
    rhs: Fraction  # q_norm(t)

    def value(self, x) -> Fraction:
        return sum(a * b for a, b in zip(self.coeffs, x))

    def is_tight(self, x) -> bool:
        return self.value(x) == self.rhs


@dataclass(frozen=True)
class FaceRecord:
    dim: int
    vertex_set: tuple
    facet_set: tuple
    barycenter: tuple

    @property
    def mask(self) -> int:
        m = 0
        for i in self.vertex_set:
            m |= 1 << i
        return m


@dataclass
class FaceLattice:
    """Faces by dimension plus downward incidences.

    ``faces[k]`` lists the k-faces sorted by vertex set; ``subfaces[k][i]``
    holds the indices into ``faces[k-1]`` of the facets of ``faces[k][i]``.
    """

    dim: int
    faces: dict
    subfaces: dict

    def f_vector(self) -> dict:
        return {k: len(v) for k, v in sorted(self.faces.items())}


def build_hrep(form: QuadraticForm, relevant: Sequence[Sequence[int]]) -> list[HalfSpace]:
    """One half-space per signed relevant vector, sorted by normal."""
    normals = sorted({tuple(s * x for x in t) for t in relevant for s in (1, -1)})
    out = []
    for t in normals:
        out.append(HalfSpace(t, tuple(2 * c for c in form.apply(t)), q_norm(form, t)))
    return out


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _primitive(v: list) -> tuple:
    g = 0
    for x in v:
        g = gcd(g, x)
    if g > 1:
        v = [x // g for x in v]
    return tuple(v)


def _homogeneous_rows(hrep: Sequence[HalfSpace]) -> list[tuple]:
    # rhs * x0 - coeffs . x >= 0, scaled to primitive integers
    rows = []
    for h in hrep:
        entries = [Fraction(h.rhs)] + [-Fraction(c) for c in h.coeffs]
        den = lcm(*(e.denominator for e in entries))
        rows.append(_primitive([int(e * den) for e in entries]))
    return rows


def enumerate_vertices(hrep: Sequence[HalfSpace]) -> list[tuple]:
    """Exact vertex list of a bounded polytope, sorted lexicographically.

    Double description on the cone ``{(x0, x): rhs*x0 - a.x >= 0}``; each
    extreme ray ``(x0, x)`` with ``x0 > 0`` is the vertex ``x / x0``.
    Adjacency uses the combinatorial test via per-constraint zero masks.
    """
    rows = _homogeneous_rows(hrep)
    n = len(rows[0])

    # initial basis of n independent constraints
    chosen = []
    for i, r in enumerate(rows):
        if rank([rows[j] for j in chosen] + [r]) > len(chosen):
            chosen.append(i)
            if len(chosen) == n:
                break
    if len(chosen) < n:
        raise UnboundedPolytope("constraint normals do not span the space")
    B = [rows[i] for i in chosen]
    rays: list[tuple] = []
    zeros: list[int] = []
    for j in range(n):
        e = [int(k == j) for k in range(n)]
        col = solve_linear(B, e)
        den = lcm(*(x.denominator for x in col))
        rays.append(_primitive([int(x * den) for x in col]))
        zeros.append(sum(1 << chosen[k] for k in range(n) if k != j))

    for i, a in enumerate(rows):
        if i in chosen:
            continue
        vals = [sum(p * q for p, q in zip(a, r)) for r in rays]
        pos = [k for k, v in enumerate(vals) if v > 0]
        neg = [k for k, v in enumerate(vals) if v < 0]
        zer = [k for k, v in enumerate(vals) if v == 0]
        if not neg:
            for k in zer:
                zeros[k] |= 1 << i
            continue
        # rays having a zero at each processed constraint
        at = {}
        for k, z in enumerate(zeros):
            for c in _bits(z):
                at[c] = at.get(c, 0) | (1 << k)
        new_rays = []
        new_zeros = []
        for p in pos:
            zp = zeros[p]
            for q in neg:
                common = zp & zeros[q]
                if common.bit_count() < n - 2:
                    continue
                holders = -1
                for c in _bits(common):
                    holders &= at[c]
                if holders != (1 << p) | (1 << q):
                    continue
                vp, vq = vals[p], -vals[q]
                r = [vp * y + vq * x for x, y in zip(rays[p], rays[q])]
                new_rays.append(_primitive(r))
                new_zeros.append(common | (1 << i))
        keep = pos + zer
        rays = [rays[k] for k in keep] + new_rays
        zeros = [zeros[k] | ((1 << i) if vals[k] == 0 else 0) for k in keep] + new_zeros

    verts = []
    for r in rays:
        if r[0] <= 0:
            raise UnboundedPolytope("extreme ray at infinity")
        verts.append(tuple(Fraction(x, r[0]) for x in r[1:]))
    verts.sort()
    if len(set(verts)) != len(verts):
        raise PipelineAssertion("duplicate vertices from double description")
    return verts


def _integer_coords(vertices):
    den = lcm(*(x.denominator for v in vertices for x in v)) if vertices else 1
    return [tuple(int(x * den) for x in v) for v in vertices], den


def face_lattice(vertices: Sequence[tuple], hrep: Sequence[HalfSpace], down_to_dim: int) -> FaceLattice:
    """Faces of dimension d-1 down to ``down_to_dim``, each listed once.

    The facets of a k-face S are the inclusion-maximal nonempty sets
    ``S & F`` over facets F not containing S; every face is checked against
    its affine dimension.
    """
    d = len(vertices[0])
    down_to_dim = max(0, down_to_dim)
    ivs, _ = _integer_coords(vertices)
    facet_masks = []
    for h in hrep:
        m = 0
        for k, v in enumerate(vertices):
            if h.is_tight(v):
                m |= 1 << k
        facet_masks.append(m)

    def facets_of(mask):
        return tuple(i for i, fm in enumerate(facet_masks) if fm & mask == mask)

    def record(k, mask):
        vs = tuple(_bits(mask))
        if affine_dimension([ivs[i] for i in vs]) != k:
            raise PipelineAssertion(f"face {vs} is not {k}-dimensional")
        pts = [vertices[i] for i in vs]
        bary = tuple(sum(c) / len(pts) for c in zip(*pts))
        return FaceRecord(k, vs, facets_of(mask), bary)

    faces = {}
    subfaces = {}
    masks = sorted(set(facet_masks), key=lambda m: tuple(_bits(m)))
    if len(masks) != len(facet_masks):
        raise PipelineAssertion("two inequalities support the same facet")
    faces[d - 1] = [record(d - 1, m) for m in masks]
    cur = masks
    for k in range(d - 2, down_to_dim - 1, -1):
        children = []
        for S in cur:
            cands = {S & F for F in facet_masks if S & F != S and S & F}
            children.append([c for c in cands if not any(c != o and c & o == c for o in cands)])
        nxt = sorted({c for ch in children for c in ch}, key=lambda m: tuple(_bits(m)))
        index = {m: j for j, m in enumerate(nxt)}
        subfaces[k + 1] = [tuple(sorted(index[c] for c in ch)) for ch in children]
        faces[k] = [record(k, m) for m in nxt]
        cur = nxt
    return FaceLattice(d, faces, subfaces)


def cell_volume(vertices: Sequence[tuple], lattice: FaceLattice | None = None, hrep=None) -> Fraction:
    """Exact volume in lattice coordinates.

    Pulling triangulation of every facet (cone each face from its smallest
    vertex over the subfaces avoiding it), coned again from the origin.
    """
    d = len(vertices[0])
    if lattice is None or min(lattice.faces) > 0:
        if hrep is None:
            raise ValueError("need hrep to complete the face lattice")
        lattice = face_lattice(vertices, hrep, 0)
    ivs, den = _integer_coords(vertices)
    memo = {}

    def triangulate(k, idx):
        key = (k, idx)
        if key in memo:
            return memo[key]
        face = lattice.faces[k][idx]
        if k == 0:
            out = [face.vertex_set]
        else:
            apex = face.vertex_set[0]
            out = []
            for j in lattice.subfaces[k][idx]:
                sub = lattice.faces[k - 1][j]
                if apex in sub.vertex_set:
                    continue
                out.extend(s + (apex,) for s in triangulate(k - 1, j))
        memo[key] = out
        return out

    total = 0
    for i in range(len(lattice.faces[d - 1])):
        for simplex in triangulate(d - 1, i):
            total += abs(det([ivs[j] for j in simplex]))
    return Fraction(total) / (factorial(d) * den**d)
