"""Does GGM still hold when pyramid-apex 4-cycles are left out of the basic cycles?

Runs each form twice and logs the basic-cycle rank against the cyclomatic
number for both rules.  Forms with no pyramid cell at the origin give equal
ranks by construction.
"""

import argparse
import logging
from dataclasses import dataclass

from venkov.forms import named_form_file
from venkov.lattice import QuadraticForm
from venkov.pipeline import PipelineOptions, analyze

log = logging.getLogger("compare_tc")


@dataclass
class CompareConfig:
    random_forms: int = 6
    seed: int = 11
    dim: int = 4


def _random_forms(cfg):
    import random

    from venkov.errors import NotPositiveDefinite

    rng = random.Random(cfg.seed)
    out = []
    while len(out) < cfg.random_forms:
        G = [[0] * cfg.dim for _ in range(cfg.dim)]
        for i in range(cfg.dim):
            G[i][i] = rng.randint(2, 6)
            for j in range(i + 1, cfg.dim):
                G[i][j] = G[j][i] = rng.randint(-2, 2)
        try:
            out.append((f"rand{len(out)}", QuadraticForm(G)))
        except NotPositiveDefinite:
            pass
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--random", type=int, default=6)
    ap.add_argument("--seed", type=int, default=11)
    ns = ap.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(message)s")
    cfg = CompareConfig(random_forms=ns.random, seed=ns.seed)

    forms = [(named_form_file(n, d).form_id, named_form_file(n, d).form) for n, d in
             (("Dstar", 4), ("Dstar", 5), ("A", 5), ("Astar", 5))]
    forms += _random_forms(cfg)
    for fid, form in forms:
        ranks = {}
        for flag in (True, False):
            res = analyze(form, fid, PipelineOptions(pyramid_tc=flag))
            ranks[flag] = (res.checks.basic_cycle_rank, res.checks.cyclomatic, len(res.contractible))
        (r1, cyc, n1), (r0, _, n0) = ranks[True], ranks[False]
        log.info("%-8s cyclomatic %4d | with apex cycles: %3d TC, rank %4d | without: %3d TC, rank %4d%s",
                 fid, cyc, n1, r1, n0, r0, "" if r0 == r1 else "  <- differs")


if __name__ == "__main__":
    main()
