"""Dual cells of faces of the Voronoi cell and their combinatorial types.

The dual cell of a face G is the set of tile centres whose tiles contain G.
For a face of the cell at 0 this is the set of lattice points nearest to any
relative-interior point of G, so the barycenter is used.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .errors import DualDimensionMismatch, MinkowskiVenkovViolation, UnclassifiableDual3Cell
from .exact import affine_dimension
from .lattice import QuadraticForm, closest_lattice_points
from .polytope import FaceLattice, FaceRecord

PRIMITIVE = "Primitive"
NON_PRIMITIVE = "NonPrimitive"

TETRAHEDRON = "Tetrahedron"
PYRAMID = "Pyramid"
OCTAHEDRON = "Octahedron"
PRISM = "Prism"
CUBE = "Cube"
DUAL3_TAGS = (TETRAHEDRON, PYRAMID, OCTAHEDRON, PRISM, CUBE)


@dataclass(frozen=True)
class DualCell:
    source_face: FaceRecord | None
    points: tuple
    dual_dim: int


@dataclass(frozen=True)
class Dual3Type:
    """Combinatorial type of a dual 3-cell with a labelling witnessing it.

    Witness layouts:

    * Tetrahedron: ``(a, b, c, d)``
    * Pyramid: ``(s, (a, b, c, d))``, apex ``s``, base in cyclic order, ``a+c == b+d``
    * Octahedron: ``((a, d), (b, e), (c, f))`` with ``a+d == b+e == c+f``
    * Prism: ``((a, b, c), (a2, b2, c2))`` with ``a-a2 == b-b2 == c-c2``
    * Cube: ``(o, u, v, w)``, points are ``o + {0,1}-combinations of u, v, w``
    """

    tag: str
    witness: tuple


def _add(x, y):
    return tuple(a + b for a, b in zip(x, y))


def _sub(x, y):
    return tuple(a - b for a, b in zip(x, y))


def dual_cell_of_face(form: QuadraticForm, face: FaceRecord) -> DualCell:
    d = form.dim
    if face.dim >= d:
        raise ValueError("faces of the full cell have no proper dual")
    _, pts = closest_lattice_points(form, face.barycenter)
    cell = DualCell(face, pts, d - face.dim)
    if tuple([0] * d) not in pts:
        raise DualDimensionMismatch(f"dual cell of face {face.vertex_set} misses the origin")
    if affine_dimension(pts) != cell.dual_dim:
        raise DualDimensionMismatch(
            f"dual cell of {face.dim}-face {face.vertex_set} spans dimension "
            f"{affine_dimension(pts)}, expected {cell.dual_dim}"
        )
    return cell


def ridge_type(cell: DualCell) -> str:
    if cell.dual_dim != 2:
        raise ValueError("ridge_type needs a dual 2-cell")
    pts = cell.points
    if len(pts) == 3:
        return PRIMITIVE
    if len(pts) == 4:
        if _parallelogram_order(pts) is None:
            raise MinkowskiVenkovViolation(f"four-point ridge dual {pts} is not a parallelogram")
        return NON_PRIMITIVE
    raise MinkowskiVenkovViolation(f"ridge shared by {len(pts)} tiles")


def _parallelogram_order(pts):
    """Cyclic order ``(a, b, c, d)`` with ``a + c == b + d``, or None."""
    a, b, c, d = pts
    for p, q, r, s in ((a, b, c, d), (a, c, b, d), (a, b, d, c)):
        # p, r opposite; q, s opposite
        if _add(p, r) == _add(q, s):
            return (p, q, r, s)
    return None


def _pyramid(pts):
    found = []
    for i, s in enumerate(pts):
        rest = pts[:i] + pts[i + 1:]
        if affine_dimension(rest) != 2:
            continue
        base = _parallelogram_order(rest)
        if base is not None:
            found.append((s, base))
    if len(found) != 1:
        return None
    return found[0]


def _perfect_matchings(items):
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for k, other in enumerate(rest):
        for m in _perfect_matchings(rest[:k] + rest[k + 1:]):
            yield ((first, other),) + m


def _octahedron(pts):
    for m in _perfect_matchings(list(pts)):
        sums = {_add(p, q) for p, q in m}
        if len(sums) == 1:
            return m
    return None


def _prism(pts):
    for tri in itertools.combinations(pts, 3):
        other = [p for p in pts if p not in tri]
        for perm in itertools.permutations(other):
            diffs = {_sub(p, q) for p, q in zip(tri, perm)}
            if len(diffs) == 1:
                return (tri, tuple(perm))
    return None


def _cube(pts):
    ps = set(pts)
    o = min(pts)
    nbrs = [p for p in pts if p != o]
    for u, v, w in itertools.combinations(nbrs, 3):
        du, dv, dw = _sub(u, o), _sub(v, o), _sub(w, o)
        gen = {
            tuple(o[k] + i * du[k] + j * dv[k] + l * dw[k] for k in range(len(o)))
            for i in (0, 1) for j in (0, 1) for l in (0, 1)
        }
        if gen == ps:
            return (o, du, dv, dw)
    return None


def classify_dual3_cell(points: Sequence[tuple]) -> Dual3Type:
    """Delaunay type of a dual 3-cell from its point set and affine relations."""
    pts = tuple(sorted(tuple(p) for p in points))
    if len(set(pts)) != len(pts) or affine_dimension(pts) != 3:
        raise UnclassifiableDual3Cell(f"{pts} is not a 3-dimensional point set")
    n = len(pts)
    if n == 4:
        return Dual3Type(TETRAHEDRON, pts)
    if n == 5:
        pyr = _pyramid(pts)
        if pyr is None:
            raise UnclassifiableDual3Cell(f"five points {pts} are not a pyramid")
        return Dual3Type(PYRAMID, pyr)
    if n == 6:
        octa = _octahedron(pts)
        prism = _prism(pts)
        if octa is not None and prism is not None:
            raise UnclassifiableDual3Cell(f"{pts} matches both octahedron and prism")
        if octa is not None:
            return Dual3Type(OCTAHEDRON, octa)
        if prism is not None:
            return Dual3Type(PRISM, prism)
        raise UnclassifiableDual3Cell(f"six points {pts} are neither octahedron nor prism")
    if n == 8:
        cube = _cube(pts)
        if cube is None:
            raise UnclassifiableDual3Cell(f"eight points {pts} are not a parallelepiped")
        return Dual3Type(CUBE, cube)
    raise UnclassifiableDual3Cell(f"dual 3-cell with {n} points")


def quadrilateral_faces(t: Dual3Type) -> list[tuple]:
    """Quadrangular 2-faces of the cell as cyclic 4-tuples (a, b, c, d)."""
    if t.tag == PYRAMID:
        return [t.witness[1]]
    if t.tag == PRISM:
        top, bot = t.witness
        return [(top[i], top[j], bot[j], bot[i]) for i, j in ((0, 1), (1, 2), (0, 2))]
    if t.tag == CUBE:
        o, u, v, w = t.witness
        quads = []
        for x, y, z in ((u, v, w), (v, w, u), (w, u, v)):
            for base in (o, _add(o, z)):
                quads.append((base, _add(base, x), _add(_add(base, x), y), _add(base, y)))
        return quads
    return []


def canonical_translate(points: Sequence[tuple]) -> tuple:
    """Translate so the lexicographically smallest point is 0; sorted."""
    m = min(points)
    return tuple(sorted(_sub(p, m) for p in points))


def face_dual_cells(form: QuadraticForm, lattice: FaceLattice, dim: int) -> list[DualCell]:
    return [dual_cell_of_face(form, f) for f in lattice.faces[dim]]


def dual3_cells(form: QuadraticForm, lattice: FaceLattice) -> list[tuple]:
    """``(DualCell, Dual3Type)`` for every (d-3)-face of the cell, in face order."""
    k = form.dim - 3
    out = []
    for f in lattice.faces[k]:
        cell = dual_cell_of_face(form, f)
        out.append((cell, classify_dual3_cell(cell.points)))
    return out


def dual3_representatives(form: QuadraticForm, lattice: FaceLattice, cells=None) -> list[tuple]:
    """Dual 3-cells up to lattice translation, sorted by canonical point set."""
    if cells is None:
        cells = dual3_cells(form, lattice)
    reps = {}
    for cell, _ in cells:
        key = canonical_translate(cell.points)
        if key not in reps:
            reps[key] = (DualCell(cell.source_face, key, 3), classify_dual3_cell(key))
    return [reps[k] for k in sorted(reps)]


def census(reps) -> dict:
    counts = Counter(t.tag for _, t in reps)
    return {tag: counts.get(tag, 0) for tag in DUAL3_TAGS}
