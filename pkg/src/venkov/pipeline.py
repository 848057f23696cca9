"""Per-form pipeline: geometry, dual cells, Venkov structures, checks, report."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .dual import DUAL3_TAGS, PRIMITIVE, census, dual3_cells, dual3_representatives, dual_cell_of_face, ridge_type
from .errors import PipelineAssertion, VenkovError
from .forms import FormFile
from .lattice import QuadraticForm, relevant_vectors
from .polytope import build_hrep, enumerate_vertices, face_lattice
from .venkov import (
    build_venkov_complex,
    build_venkov_graph,
    cohomology_check,
    ggm_check,
    half_belt_cycles,
    ordine_check,
    skeleton_check,
    triangle_span_check,
    trivially_contractible_cycles,
)

STAGES = ("relevant", "hrep", "vertices", "faces", "dual", "venkov")


@dataclass
class PipelineOptions:
    down_to_dim: int | None = None
    pyramid_tc: bool = True
    stage: str | None = None
    timings: bool = False

    def __post_init__(self):
        if self.stage is not None and self.stage not in STAGES:
            raise ValueError(f"unknown stage {self.stage!r}; choose from {', '.join(STAGES)}")


@dataclass
class CheckReport:
    f0: int
    f1: int
    f2: int
    rank_delta0: int
    rank_delta1: int
    h1_trivial: bool
    graph_v: int
    graph_e: int
    graph_k: int
    cyclomatic: int
    basic_cycle_rank: int
    ggm_holds: bool
    ordine3_irreducible: bool
    skeleton_match: bool
    isolated_vertices: int
    triangle_span: bool


@dataclass
class PipelineResult:
    """Everything computed for one form; ``report()`` renders the JSON document."""

    form_id: str
    form: QuadraticForm
    stage: str = ""
    relevant: list = field(default_factory=list)
    hrep: list = field(default_factory=list)
    vertices: list = field(default_factory=list)
    lattice: object = None
    ridge_cells: list = field(default_factory=list)
    ridge_types: list = field(default_factory=list)
    ridges: list = field(default_factory=list)
    dual3: list = field(default_factory=list)
    reps: list = field(default_factory=list)
    complex: object = None
    graph: object = None
    half_belt: list = field(default_factory=list)
    contractible: list = field(default_factory=list)
    checks: CheckReport | None = None
    timings: dict = field(default_factory=dict)

    @property
    def dim(self):
        return self.form.dim

    def report(self, with_timings: bool = False) -> dict:
        d = self.dim
        rep = {
            "formId": self.form_id,
            "dim": d,
            "gram": [[str(x) for x in row] for row in self.form.gram],
            "stage": self.stage,
            "status": "ok",
            "facetPairs": len(self.relevant) if self.stage_reached("relevant") else None,
            "vertexCount": len(self.vertices) if self.stage_reached("vertices") else None,
            "ridgeCounts": None,
            "dual3Census": None,
            "venkov": None,
            "graph": None,
            "ordine3Irreducible": None,
            "skeletonMatch": None,
            "triangleSpan": None,
            "timings": dict(self.timings) if with_timings else None,
        }
        if self.stage_reached("dual"):
            prim = sum(1 for t in self.ridge_types if t == PRIMITIVE)
            rep["ridgeCounts"] = {"primitive": prim, "nonPrimitive": len(self.ridge_types) - prim}
            if d >= 3:
                c = census(self.reps)
                rep["dual3Census"] = {tag[0].lower() + tag[1:]: c[tag] for tag in DUAL3_TAGS}
        ch = self.checks
        if ch is not None:
            rep["venkov"] = {
                "f0": ch.f0, "f1": ch.f1, "f2": ch.f2,
                "rankDelta0": ch.rank_delta0, "rankDelta1": ch.rank_delta1,
                "h1Trivial": ch.h1_trivial,
            }
            rep["graph"] = {
                "v": ch.graph_v,
                "redEdges": len(self.graph.red_edges),
                "blueEdges": len(self.graph.blue_edges),
                "components": ch.graph_k,
                "isolated": ch.isolated_vertices,
                "cyclomatic": ch.cyclomatic,
                "halfBeltCycles": len(self.half_belt),
                "triviallyContractibleCycles": len(self.contractible),
                "basicCycleRank": ch.basic_cycle_rank,
                "ggmHolds": ch.ggm_holds,
            }
            rep["ordine3Irreducible"] = ch.ordine3_irreducible
            rep["skeletonMatch"] = ch.skeleton_match
            rep["triangleSpan"] = ch.triangle_span
        return rep

    def stage_reached(self, name: str) -> bool:
        return bool(self.stage) and STAGES.index(self.stage) >= STAGES.index(name)


def analyze(form: QuadraticForm, form_id: str = "form", options: PipelineOptions | None = None) -> PipelineResult:
    """Run the stages in order; a raised ``VenkovError`` carries the failing stage name."""
    res = PipelineResult(form_id, form)
    try:
        return _run(res, options or PipelineOptions())
    except VenkovError as exc:
        k = STAGES.index(res.stage) + 1 if res.stage else 0
        exc.stage = STAGES[min(k, len(STAGES) - 1)]
        raise


def _run(res: PipelineResult, opts: PipelineOptions) -> PipelineResult:
    form = res.form
    d = form.dim
    clock = time.perf_counter

    def done(name, t0):
        res.stage = name
        res.timings[name] = round(clock() - t0, 6)
        return opts.stage == name

    t0 = clock()
    res.relevant = relevant_vectors(form)
    if done("relevant", t0):
        return res

    t0 = clock()
    res.hrep = build_hrep(form, res.relevant)
    if done("hrep", t0):
        return res

    t0 = clock()
    res.vertices = enumerate_vertices(res.hrep)
    if done("vertices", t0):
        return res

    t0 = clock()
    low = d - 3 if opts.down_to_dim is None else min(opts.down_to_dim, d - 3)
    res.lattice = face_lattice(res.vertices, res.hrep, max(low, 0))
    if done("faces", t0):
        return res

    t0 = clock()
    res.ridge_cells = [dual_cell_of_face(form, f) for f in res.lattice.faces[d - 2]]
    res.ridge_types = [ridge_type(c) for c in res.ridge_cells]
    for cell, kind in zip(res.ridge_cells, res.ridge_types):
        fs = cell.source_face.facet_set
        if len(fs) != 2:
            raise PipelineAssertion(f"ridge {cell.source_face.vertex_set} lies in {len(fs)} facets")
        t1, t2 = (res.hrep[i].normal for i in fs)
        if t1 not in cell.points or t2 not in cell.points:
            raise PipelineAssertion(f"ridge dual {cell.points} misses facet normals {t1}, {t2}")
        res.ridges.append((t1, t2, kind))
    if d >= 3:
        res.dual3 = dual3_cells(form, res.lattice)
        res.reps = dual3_representatives(form, res.lattice, res.dual3)
    if done("dual", t0) or d < 4:
        return res

    t0 = clock()
    res.complex = build_venkov_complex(res.reps, d)
    res.graph = build_venkov_graph(res.relevant, res.ridges)
    match, isolated = skeleton_check(res.complex, res.graph)
    r0, r1, h1 = cohomology_check(res.complex)
    res.half_belt = half_belt_cycles(res.ridge_cells, res.graph)
    res.contractible = trivially_contractible_cycles(res.dual3, res.graph, opts.pyramid_tc)
    basic = res.half_belt + res.contractible
    g = ggm_check(res.graph, basic)
    f0, f1, f2 = res.complex.f_vector
    res.checks = CheckReport(
        f0, f1, f2, r0, r1, h1,
        g["v"], g["e"], g["k"], g["cyclomatic"], g["basicCycleRank"], g["ggmHolds"],
        ordine_check(res.reps), match, isolated,
        triangle_span_check(res.complex, basic, res.graph),
    )
    done("venkov", t0)
    return res


def run_pipeline(ff: FormFile, options: PipelineOptions | None = None) -> dict:
    opts = options or PipelineOptions()
    return analyze(ff.form, ff.form_id, opts).report(opts.timings)


def report_passes(rep: dict) -> bool:
    """All applicable checks true (Ordine irreducibility is informational)."""
    if rep.get("status") != "ok":
        return False
    flags = [rep["skeletonMatch"], rep["triangleSpan"]]
    if rep["venkov"] is not None:
        flags.append(rep["venkov"]["h1Trivial"])
    if rep["graph"] is not None:
        flags.append(rep["graph"]["ggmHolds"])
    return all(f is not False for f in flags)

