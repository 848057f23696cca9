"""Table of geometry, census and check results for the named lattices."""

import argparse
import time
from dataclasses import dataclass, field

from venkov.forms import NAMED, named_form_file
from venkov.pipeline import PipelineOptions, analyze


@dataclass
class CensusConfig:
    dims: list = field(default_factory=lambda: [4, 5])
    names: tuple = NAMED
    pyramid_tc: bool = True


def row(name, d, cfg):
    ff = named_form_file(name, d)
    t0 = time.perf_counter()
    rep = analyze(ff.form, ff.form_id, PipelineOptions(pyramid_tc=cfg.pyramid_tc)).report()
    dt = time.perf_counter() - t0
    c = rep["dual3Census"] or {}
    v, g = rep["venkov"] or {}, rep["graph"] or {}
    return (
        f"{ff.form_id:8s} {rep['facetPairs']:4d} {rep['vertexCount']:5d} "
        f"{'/'.join(str(c.get(k, 0)) for k in ('tetrahedron', 'pyramid', 'octahedron', 'prism', 'cube')):16s} "
        f"{v.get('f0', '-')!s:>4} {v.get('f1', '-')!s:>4} {v.get('f2', '-')!s:>4} "
        f"{g.get('cyclomatic', '-')!s:>5} {g.get('basicCycleRank', '-')!s:>5} "
        f"{v.get('h1Trivial')!s:6s} {g.get('ggmHolds')!s:6s} {rep['triangleSpan']!s:6s} {dt:7.2f}s"
    )


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--dims", type=int, nargs="+", default=[4, 5])
    ap.add_argument("--no-pyramid-tc", action="store_true")
    ns = ap.parse_args()
    cfg = CensusConfig(dims=ns.dims, pyramid_tc=not ns.no_pyramid_tc)
    print("form      fac  vert tet/pyr/oct/pri/cub   f0   f1   f2   cyc  rank h1     ggm    span      time")
    for d in cfg.dims:
        for name in cfg.names:
            if name.startswith("D") and d < 3:
                continue
            print(row(name, d, cfg))


if __name__ == "__main__":
    main()
