"""Run the checks on random integral positive definite forms and tally the results."""

import argparse
import random
from collections import Counter
from dataclasses import dataclass

from venkov.errors import NotPositiveDefinite
from venkov.lattice import QuadraticForm
from venkov.pipeline import analyze, report_passes


@dataclass
class SweepConfig:
    dim: int = 4
    count: int = 20
    bound: int = 3
    seed: int = 0


def sample(cfg, rng):
    while True:
        G = [[0] * cfg.dim for _ in range(cfg.dim)]
        for i in range(cfg.dim):
            G[i][i] = rng.randint(cfg.bound, 3 * cfg.bound)
            for j in range(i + 1, cfg.dim):
                G[i][j] = G[j][i] = rng.randint(-cfg.bound, cfg.bound)
        try:
            return QuadraticForm(G)
        except NotPositiveDefinite:
            continue


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--dim", type=int, default=4)
    ap.add_argument("--count", type=int, default=20)
    ap.add_argument("--bound", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    cfg = SweepConfig(**vars(ap.parse_args()))
    rng = random.Random(cfg.seed)
    tally = Counter()
    facets = Counter()
    for i in range(cfg.count):
        rep = analyze(sample(cfg, rng), f"r{i}").report()
        facets[rep["facetPairs"]] += 1
        tally["pass" if report_passes(rep) else "fail"] += 1
        tally["ordine"] += bool(rep["ordine3Irreducible"])
    print(f"d={cfg.dim} n={cfg.count}: {dict(tally)}")
    print("facet pairs:", dict(sorted(facets.items())))


if __name__ == "__main__":
    main()
