"""Venkov complex, red/blue Venkov graphs and the sufficient-condition checks.

Labels are parity classes: d-tuples of 0/1.  Simplices are sorted tuples of
labels, which fixes both the global order and the orientation used by the
boundary and coboundary matrices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

import networkx as nx

from .dual import CUBE, OCTAHEDRON, PRIMITIVE, PRISM, PYRAMID, TETRAHEDRON, DualCell, Dual3Type
from .errors import DegenerateTriple, DimensionTooSmall, MissingRedEdge, RedBlueConflict
from .exact import EchelonBasis, rank
from .lattice import parity


def _par_sum(x, y):
    return tuple((a + b) & 1 for a, b in zip(x, y))


def octahedron_triples(a, b, c, a2, b2, c2) -> list[tuple]:
    """The eight triangles of an octahedron with antipodal pairs (a,a2), (b,b2), (c,c2)."""
    return [
        (a, b, c), (a2, b2, c2), (a2, b, c), (a, b2, c2),
        (a, b2, c), (a2, b, c2), (a, b, c2), (a2, b2, c),
    ]


def triangles_of_dual3_cell(t: Dual3Type) -> set[tuple]:
    """Venkov triangles contributed by one dual 3-cell, as sorted label triples."""
    s = _par_sum
    w = t.witness
    if t.tag == TETRAHEDRON:
        a, b, c, d = w
        labels = (s(a, b), s(a, c), s(a, d), s(c, d), s(b, d), s(b, c))
        triples = octahedron_triples(*labels)
    elif t.tag == PYRAMID:
        apex, (a, b, c, d) = w
        labels = (s(apex, a), s(apex, b), s(a, d), s(apex, c), s(apex, d), s(a, b))
        triples = octahedron_triples(*labels)
    elif t.tag == OCTAHEDRON:
        (a, d), (b, e), (c, f) = w
        labels = (s(a, b), s(a, c), s(b, c), s(a, e), s(a, f), s(b, f))
        triples = octahedron_triples(*labels)
    elif t.tag == PRISM:
        (a, b, c), _ = w
        triples = [(s(a, b), s(a, c), s(b, c))]
    elif t.tag == CUBE:
        return set()
    else:
        raise ValueError(f"unknown dual 3-cell type {t.tag}")
    out = set()
    for tri in triples:
        if len(set(tri)) != 3:
            raise DegenerateTriple(f"{t.tag} cell {w} gives repeated labels {tri}")
        out.add(tuple(sorted(tri)))
    return out


@dataclass
class VenkovComplex:
    vertices: list = field(default_factory=list)
    edges: list = field(default_factory=list)
    triangles: list = field(default_factory=list)

    @classmethod
    def from_triangles(cls, triangles: Iterable[Sequence]) -> "VenkovComplex":
        tris = sorted({tuple(sorted(t)) for t in triangles})
        edges = sorted({e for t in tris for e in combinations(t, 2)})
        verts = sorted({v for t in tris for v in t})
        return cls(verts, edges, tris)

    @property
    def f_vector(self) -> tuple:
        return (len(self.vertices), len(self.edges), len(self.triangles))


def build_venkov_complex(reps, dim: int) -> VenkovComplex:
    if dim < 4:
        raise DimensionTooSmall(f"the Venkov complex needs d >= 4, got {dim}")
    tris = set()
    for _, t in reps:
        tris |= triangles_of_dual3_cell(t)
    return VenkovComplex.from_triangles(tris)


@dataclass
class VenkovGraph:
    vertices: list
    red_edges: list
    blue_edges: list

    def red_index(self) -> dict:
        return {e: i for i, e in enumerate(self.red_edges)}


def build_venkov_graph(relevant: Sequence[tuple], ridges: Sequence[tuple]) -> VenkovGraph:
    """Graph on facet pairs keyed by parity class.

    ``ridges`` holds ``(t1, t2, kind)``: the normals of the two facets of the
    cell meeting at a ridge and that ridge's type.
    """
    verts = sorted({parity(t) for t in relevant})
    red, blue = set(), set()
    for t1, t2, kind in ridges:
        e = tuple(sorted((parity(t1), parity(t2))))
        (red if kind == PRIMITIVE else blue).add(e)
    both = red & blue
    if both:
        raise RedBlueConflict(f"pairs coloured both red and blue: {sorted(both)[:3]}")
    return VenkovGraph(verts, sorted(red), sorted(blue))


def skeleton_check(cx: VenkovComplex, graph: VenkovGraph) -> tuple[bool, int]:
    match = set(cx.edges) == set(graph.red_edges) and set(cx.vertices) <= set(graph.vertices)
    touched = {v for e in graph.red_edges for v in e}
    isolated = sum(1 for v in graph.vertices if v not in touched)
    return match, isolated


def coboundary_matrices(cx: VenkovComplex):
    """``(delta0, delta1)`` as dense integer row lists.

    ``delta0`` is edges x vertices, ``delta1`` is triangles x edges, with
    the alternating sign convention on sorted simplices.
    """
    vidx = {v: i for i, v in enumerate(cx.vertices)}
    eidx = {e: i for i, e in enumerate(cx.edges)}
    d0 = []
    for u, v in cx.edges:
        row = [0] * len(cx.vertices)
        row[vidx[u]] = -1
        row[vidx[v]] = 1
        d0.append(row)
    d1 = []
    for a, b, c in cx.triangles:
        row = [0] * len(cx.edges)
        row[eidx[(b, c)]] += 1
        row[eidx[(a, c)]] -= 1
        row[eidx[(a, b)]] += 1
        d1.append(row)
    return d0, d1


def cohomology_check(cx: VenkovComplex) -> tuple[int, int, bool]:
    """Ranks of the coboundaries and whether H^1 vanishes (rk d0 + rk d1 == f1)."""
    d0, d1 = coboundary_matrices(cx)
    r0, r1 = rank(d0), rank(d1)
    return r0, r1, r0 + r1 == len(cx.edges)


def cycle_vector(walk: Sequence, edge_index: dict) -> tuple:
    """Signed edge coefficients of a closed walk ``[x1, ..., xk]`` (closing edge implied)."""
    coeffs = [0] * len(edge_index)
    k = len(walk)
    for i in range(k):
        u, v = walk[i], walk[(i + 1) % k]
        e = (u, v) if u < v else (v, u)
        j = edge_index.get(e)
        if j is None:
            raise MissingRedEdge(f"cycle step {u} -> {v} is not a red edge")
        coeffs[j] += 1 if u < v else -1
    return tuple(coeffs)


def _support_key(vec):
    return tuple(i for i, c in enumerate(vec) if c)


def _dedup(cycles):
    seen = {}
    for c in cycles:
        seen.setdefault(_support_key(c), c)
    return [seen[k] for k in sorted(seen)]


def half_belt_cycles(ridge_cells: Sequence[DualCell], graph: VenkovGraph) -> list[tuple]:
    """Triangle cycles of the facet pairs parallel to each primitive ridge."""
    eidx = graph.red_index()
    out = []
    for cell in ridge_cells:
        if len(cell.points) != 3:
            continue
        t0, t1, t2 = cell.points
        walk = [parity(_diff(t1, t0)), parity(_diff(t2, t1)), parity(_diff(t0, t2))]
        out.append(cycle_vector(walk, eidx))
    return _dedup(out)


def _diff(x, y):
    return tuple(a - b for a, b in zip(x, y))


def contractible_walk(t: Dual3Type, include_pyramid_apex: bool = True):
    """Labels of the facets around the (d-3)-face whose dual cell is ``t``, or None.

    The dual cell contains the origin; the facets of the cell at 0 around the
    face correspond to the edges of the dual cell at 0, visited in cyclic
    order.  Only cells whose 2-faces at 0 are all triangles qualify.
    """
    first = t.witness[0][0] if t.tag in (OCTAHEDRON, PRISM) else t.witness[0]
    zero = tuple([0] * len(first))
    if t.tag == TETRAHEDRON:
        others = [p for p in t.witness if p != zero]
        return [parity(p) for p in others]
    if t.tag == OCTAHEDRON:
        pairs = t.witness
        rest = [pr for pr in pairs if zero not in pr]
        (b, e), (c, f) = rest
        return [parity(b), parity(c), parity(e), parity(f)]
    if t.tag == PYRAMID and include_pyramid_apex:
        apex, base = t.witness
        if apex == zero:
            return [parity(p) for p in base]
    return None


def trivially_contractible_cycles(cells: Sequence[tuple], graph: VenkovGraph, include_pyramid_apex: bool = True) -> list[tuple]:
    """Cycles around (d-3)-faces of the cell crossing only primitive ridges.

    ``cells`` are the ``(DualCell, Dual3Type)`` of the faces of the cell at
    the origin (before translation dedup).
    """
    eidx = graph.red_index()
    out = []
    for _, t in cells:
        walk = contractible_walk(t, include_pyramid_apex)
        if walk is not None:
            out.append(cycle_vector(walk, eidx))
    return _dedup(out)


def ggm_check(graph: VenkovGraph, cycles: Sequence[tuple]) -> dict:
    """Compare the rank of the basic cycles with the cyclomatic number e - v + k."""
    G = nx.Graph()
    G.add_nodes_from(graph.vertices)
    G.add_edges_from(graph.red_edges)
    v, e = G.number_of_nodes(), G.number_of_edges()
    k = nx.number_connected_components(G)
    cyclomatic = e - v + k
    r = rank(cycles)
    return {"v": v, "e": e, "k": k, "cyclomatic": cyclomatic, "basicCycleRank": r, "ggmHolds": r == cyclomatic}


def ordine_check(reps) -> bool:
    """True iff no dual 3-cell is a prism or a cube."""
    return not any(t.tag in (PRISM, CUBE) for _, t in reps)


def triangle_span_check(cx: VenkovComplex, cycles: Sequence[tuple], graph: VenkovGraph) -> bool:
    """Whether every cycle (over the red edge order) is a combination of triangle boundaries."""
    eidx = {e: i for i, e in enumerate(cx.edges)}
    _, d1 = coboundary_matrices(cx)
    basis = EchelonBasis()
    for row in d1:
        basis.add(row)
    for cyc in cycles:
        vec = [0] * len(cx.edges)
        for e, c in zip(graph.red_edges, cyc):
            if not c:
                continue
            j = eidx.get(e)
            if j is None:
                return False
            vec[j] = c
        if vec not in basis:
            return False
    return True
