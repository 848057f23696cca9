import random
from functools import lru_cache

import pytest

from venkov.errors import NotPositiveDefinite
from venkov.forms import named_form_file
from venkov.lattice import QuadraticForm
from venkov.pipeline import PipelineOptions, analyze

_ACCEPTANCE = []


def random_pd_forms(d, count, seed, bound=5):
    """Seeded random integral PD Gram matrices with entries in [-bound, bound]."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        G = [[0] * d for _ in range(d)]
        for i in range(d):
            G[i][i] = rng.randint(1, bound)
            for j in range(i + 1, d):
                G[i][j] = G[j][i] = rng.randint(-bound, bound)
        try:
            out.append(QuadraticForm(G))
        except NotPositiveDefinite:
            continue
    return out


def perturbed_forms(d, count, seed):
    """Random integral PD perturbations of 3 * A_d-like bases, as used for the 4-dim census."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        G = [[3 * (2 if i == j else -1 if abs(i - j) == 1 else 0) for j in range(d)] for i in range(d)]
        for i in range(d):
            for j in range(i, d):
                x = rng.randint(-2, 2)
                G[i][j] += x
                if i != j:
                    G[j][i] += x
        try:
            out.append(QuadraticForm(G))
        except NotPositiveDefinite:
            continue
    return out


@lru_cache(maxsize=None)
def named_result(name, d, pyramid_tc=True):
    ff = named_form_file(name, d)
    return analyze(ff.form, ff.form_id, PipelineOptions(pyramid_tc=pyramid_tc))


@lru_cache(maxsize=None)
def gram_result(gram: tuple, pyramid_tc=True):
    return analyze(QuadraticForm(gram), "form", PipelineOptions(pyramid_tc=pyramid_tc))


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion reported in the summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        detail = dict(item.user_properties).get("detail", "")
        _ACCEPTANCE.append((mark.args[0], rep.passed, detail))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, passed, detail in sorted(_ACCEPTANCE):
        line = f"{'PASS' if passed else 'FAIL'}  {label}"
        if detail:
            line += f"  [{detail}]"
        terminalreporter.write_line(line)
