"""End-to-end acceptance suite; each test prints one PASS/FAIL line in the summary."""

import itertools
import time

import pytest

from venkov.cli import run_batch
from venkov.dual import CUBE, DUAL3_TAGS, NON_PRIMITIVE, classify_dual3_cell, dual_cell_of_face, quadrilateral_faces
from venkov.forms import format_form, named_form_file, named_gram
from venkov.lattice import relevant_vectors, shortest_vectors_in_coset
from venkov.oracle import (
    brute_dual_cell,
    brute_shortest_in_coset,
    brute_voronoi_facets,
    brute_with_growing_box,
    coset_radius,
    dual_radius,
    facet_radius,
)
from venkov.pipeline import PipelineOptions, analyze
from venkov.polytope import cell_volume, face_lattice
from venkov.venkov import VenkovComplex, cohomology_check, octahedron_triples

from conftest import named_result, perturbed_forms, random_pd_forms

FOUR_DIM = [("Z", 4), ("A", 4), ("D", 4), ("Astar", 4), ("Dstar", 4)]
FIVE_DIM = [("A", 5), ("D", 5), ("Astar", 5), ("Dstar", 5)]
PERTURBED = perturbed_forms(4, 6, seed=2024)


def _all_results():
    """Every d >= 2 form the structural criteria range over."""
    out = [(f"{n}{d}", named_result(n, d)) for n, d in FOUR_DIM + FIVE_DIM + [("Z", 5)]]
    out += [(f"pert{i}", analyze(f, f"pert{i}")) for i, f in enumerate(PERTURBED)]
    for d in (2, 3):
        for name in ("Z", "A", "Astar"):
            out.append((f"{name}{d}", named_result(name, d)))
        out += [(f"rand{d}_{i}", analyze(f, f"rand{d}_{i}")) for i, f in enumerate(random_pd_forms(d, 5, seed=d))]
    return out


@pytest.mark.criterion("1 Z5: cubes only, empty complex, five isolated classes")
def test_criterion_1_cubic_lattice(record_property):
    ff = named_form_file("Z", 5)
    t0 = time.perf_counter()
    res = analyze(ff.form, ff.form_id, PipelineOptions())
    elapsed = time.perf_counter() - t0
    rep = res.report()
    record_property("detail", f"{elapsed:.2f}s")
    assert len(res.hrep) == 10 and rep["facetPairs"] == 5
    assert rep["ridgeCounts"]["primitive"] == 0 and all(t == NON_PRIMITIVE for t in res.ridge_types)
    census = rep["dual3Census"]
    assert census["cube"] > 0 and sum(census.values()) == census["cube"]
    assert all(t.tag == CUBE for _, t in res.dual3)
    assert (rep["venkov"]["f0"], rep["venkov"]["f1"], rep["venkov"]["f2"]) == (0, 0, 0)
    assert rep["venkov"]["h1Trivial"] is True
    g = rep["graph"]
    assert (g["v"], g["redEdges"], g["isolated"], g["components"]) == (5, 0, 5, 5)
    assert g["cyclomatic"] == 0 and g["ggmHolds"] is True
    assert rep["ordine3Irreducible"] is False
    assert elapsed < 1.0


@pytest.mark.criterion("2 A5, D5, A5*, D5*: H1 trivial and GGM holds")
def test_criterion_2_five_dim_named(record_property):
    times = []
    for name, d in FIVE_DIM:
        t0 = time.perf_counter()
        rep = named_result(name, d).report()
        times.append(time.perf_counter() - t0)
        assert rep["stage"] == "venkov"
        assert rep["venkov"]["h1Trivial"] is True, name
        assert rep["graph"]["ggmHolds"] is True, name
        assert rep["venkov"]["rankDelta0"] + rep["venkov"]["rankDelta1"] == rep["venkov"]["f1"]
        assert rep["graph"]["basicCycleRank"] == rep["graph"]["cyclomatic"]
    record_property("detail", "max %.1fs per form" % max(times))
    assert max(times) < 300


@pytest.mark.criterion("3 four-dim named and perturbed forms: GGM holds, GGM implies H1")
def test_criterion_3_four_dim(record_property):
    results = [named_result(n, d) for n, d in FOUR_DIM]
    slowest = 0.0
    for i, form in enumerate(PERTURBED):
        t0 = time.perf_counter()
        results.append(analyze(form, f"pert{i}"))
        slowest = max(slowest, time.perf_counter() - t0)
    assert len(PERTURBED) >= 5
    for res in results:
        assert res.checks.ggm_holds, res.form_id
        assert res.checks.h1_trivial, res.form_id
    # the implication over every d >= 4 form in the suite
    for _, res in _all_results():
        if res.checks is not None and res.checks.ggm_holds:
            assert res.checks.h1_trivial, res.form_id
    record_property("detail", f"{len(results)} forms, slowest perturbed {slowest:.1f}s")
    assert slowest < 30


def _oracle_mismatches(form):
    bad = []
    rel = relevant_vectors(form)
    signed = {v for r in rel for v in (r, tuple(-x for x in r))}
    if signed != brute_with_growing_box(brute_voronoi_facets, form, start=facet_radius(form), max_radius=64):
        bad.append("relevant")
    for c in itertools.product((0, 1), repeat=form.dim):
        if not any(c):
            continue
        m, vs = shortest_vectors_in_coset(form, c)
        bm, bvs = brute_with_growing_box(brute_shortest_in_coset, form, c, start=coset_radius(form, c), max_radius=64)
        if m != bm or set(vs) != bvs:
            bad.append(f"coset {c}")
    res = analyze(form, "oracle", PipelineOptions(stage="vertices"))
    lat = face_lattice(res.vertices, res.hrep, 0)
    for k in range(form.dim):
        for f in lat.faces[k]:
            pts = set(dual_cell_of_face(form, f).points)
            if pts != brute_with_growing_box(brute_dual_cell, form, f.barycenter, start=dual_radius(form, f.barycenter), max_radius=64):
                bad.append(f"face {f.vertex_set}")
    return bad


@pytest.mark.criterion("4 oracle equivalence on 100+ random forms with d <= 3")
def test_criterion_4_oracle_equivalence(record_property):
    forms = random_pd_forms(2, 40, seed=401) + random_pd_forms(3, 70, seed=402)
    assert all(abs(x) <= 5 for f in forms for row in f.gram for x in row)
    mismatches = {}
    for i, form in enumerate(forms):
        bad = _oracle_mismatches(form)
        if bad:
            mismatches[i] = bad
    record_property("detail", f"{len(forms)} forms, {len(mismatches)} with mismatches")
    assert len(forms) >= 100
    assert mismatches == {}


@pytest.mark.criterion("5 structural invariants on every test form")
def test_criterion_5_structure(record_property):
    results = _all_results()
    for fid, res in results:
        d = res.dim
        assert cell_volume(res.vertices, hrep=res.hrep) == 1, fid
        vs = set(res.vertices)
        assert all(tuple(-x for x in v) in vs for v in vs), fid
        normals = {h.normal for h in res.hrep}
        assert all(tuple(-x for x in t) in normals for t in normals), fid
        assert all(len(c.points) in (3, 4) for c in res.ridge_cells), fid
        if d >= 3:
            for cell, t in res.dual3:
                assert t.tag in DUAL3_TAGS
                assert classify_dual3_cell(cell.points).tag == t.tag
                for a, b, c, e in quadrilateral_faces(t):
                    assert tuple(x + z for x, z in zip(a, c)) == tuple(y + w for y, w in zip(b, e)), fid
        if d >= 4:
            assert res.checks.skeleton_match, fid
    record_property("detail", f"{len(results)} forms")


@pytest.mark.criterion("6 basic cycles lie in the span of Venkov triangle boundaries")
def test_criterion_6_triangle_span(record_property):
    n = 0
    for fid, res in _all_results():
        if res.dim >= 4:
            n += 1
            assert res.checks.triangle_span, fid
    # also with the pyramid-apex cycles left out
    for name, d in (("Dstar", 4), ("Dstar", 5)):
        assert named_result(name, d, pyramid_tc=False).checks.triangle_span
    record_property("detail", f"{n} forms")


@pytest.mark.criterion("7 batch reports byte-identical across runs and job counts")
def test_criterion_7_determinism(tmp_path, record_property):
    src = tmp_path / "forms"
    src.mkdir()
    for name, d in FOUR_DIM + [("Z", 5), ("A", 3)]:
        (src / f"{name}{d}.gram").write_text(format_form(named_gram(name, d)))
    for i, form in enumerate(PERTURBED[:3]):
        (src / f"pert{i}.gram").write_text(format_form(form.gram))
    (src / "broken.gram").write_text("3\n1 0 0\n0 1 0\n")
    paths = sorted(str(p) for p in src.iterdir())

    def snapshot(out, jobs):
        run_batch(paths, out, jobs)
        return {p.name: p.read_bytes() for p in sorted(out.iterdir())}

    a = snapshot(tmp_path / "a", 1)
    b = snapshot(tmp_path / "b", 1)
    c = snapshot(tmp_path / "c", 3)
    record_property("detail", f"{len(a)} files")
    assert a == b == c
    assert len(a) == len(paths) + 1


@pytest.mark.criterion("8 synthetic cohomology: empty, octahedron surface, hollow triangle")
def test_criterion_8_synthetic_cohomology():
    assert cohomology_check(VenkovComplex.from_triangles([])) == (0, 0, True)
    octa = VenkovComplex.from_triangles(octahedron_triples(*range(6)))
    r0, r1, ok = cohomology_check(octa)
    assert (r0, r1, octa.f_vector[1], ok) == (5, 7, 12, True)
    hollow = VenkovComplex(vertices=["a", "b", "c"], edges=[("a", "b"), ("a", "c"), ("b", "c")], triangles=[])
    assert cohomology_check(hollow)[2] is False
