"""Command line entry point: ``venkov run | batch | gen``.

Exit codes: 0 every check passed, 1 some check false (or a golden
mismatch), 2 input error, 3 internal assertion violation.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .errors import InputError, PipelineAssertion, VenkovError
from .forms import NAMED, format_form, named_gram, read_form_file
from .pipeline import STAGES, PipelineOptions, analyze, report_passes

log = logging.getLogger("venkov")

EXIT_OK, EXIT_CHECK_FAILED, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


def dumps(rep: dict) -> str:
    return json.dumps(rep, separators=(",", ":"), ensure_ascii=True) + "\n"


def _error_report(form_id, status, exc) -> dict:
    return {
        "formId": form_id,
        "status": status,
        "error": {
            "type": type(exc).__name__,
            "message": str(exc),
            "stage": getattr(exc, "stage", None),
        },
    }


def process_file(path: str, opts: PipelineOptions) -> tuple[str, dict, int]:
    """Run one form file; never raises for expected failure classes."""
    form_id = Path(path).stem
    try:
        ff = read_form_file(path)
    except (InputError, OSError, UnicodeDecodeError) as exc:
        return form_id, _error_report(form_id, "input-error", exc), EXIT_INPUT
    try:
        rep = analyze(ff.form, ff.form_id, opts).report(opts.timings)
    except InputError as exc:
        return form_id, _error_report(form_id, "input-error", exc), EXIT_INPUT
    except (PipelineAssertion, VenkovError) as exc:
        return form_id, _error_report(form_id, "internal-error", exc), EXIT_INTERNAL
    return form_id, rep, EXIT_OK if report_passes(rep) else EXIT_CHECK_FAILED


def _strip_timings(text: str) -> dict:
    rep = json.loads(text)
    rep.pop("timings", None)
    return rep


def compare_golden(form_id: str, rep: dict, golden_dir) -> str | None:
    """None on match, otherwise a short reason."""
    g = Path(golden_dir) / f"{form_id}.json"
    if not g.exists():
        return "missing golden file"
    want = _strip_timings(g.read_text())
    got = dict(rep)
    got.pop("timings", None)
    if want == got:
        return None
    diff = sorted(k for k in set(want) | set(got) if want.get(k) != got.get(k))
    return "differs in " + ", ".join(diff)


def collect_inputs(source) -> list[str]:
    p = Path(source)
    if p.is_dir():
        return [str(f) for f in sorted(p.iterdir()) if f.is_file() and not f.name.startswith(".")]
    out = []
    for line in p.read_text().splitlines():
        s = line.strip()
        if s and not s.startswith("#"):
            q = Path(s)
            out.append(str(q if q.is_absolute() else p.parent / q))
    return out


def _worker(args):
    path, opts = args
    return process_file(path, opts)


def run_batch(paths, out_dir, jobs: int = 1, opts: PipelineOptions | None = None, golden=None):
    """Process many form files; write ``<formId>.json`` files and ``summary.json``.

    Output bytes do not depend on ``jobs``: results are merged in input order
    and reports are sorted by form id.
    """
    opts = opts or PipelineOptions()
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    work = [(p, opts) for p in paths]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_worker, work))
    else:
        results = [_worker(w) for w in work]
    results.sort(key=lambda r: r[0])

    ids = [r[0] for r in results]
    dup = sorted({i for i in ids if ids.count(i) > 1})
    statuses = []
    counts = {"h1Trivial": 0, "ggmHolds": 0, "skeletonMatch": 0, "triangleSpan": 0, "ordine3Irreducible": 0}
    applicable = 0
    code = EXIT_OK
    for form_id, rep, rc in results:
        entry = {"formId": form_id, "status": rep["status"], "exitCode": rc}
        if golden is not None and rep["status"] == "ok":
            why = compare_golden(form_id, rep, golden)
            if why:
                entry["golden"] = why
                rc = max(rc, EXIT_CHECK_FAILED)
                entry["exitCode"] = rc
        if rep["status"] == "ok" and rep.get("venkov") is not None:
            applicable += 1
            counts["h1Trivial"] += rep["venkov"]["h1Trivial"]
            counts["ggmHolds"] += rep["graph"]["ggmHolds"]
            counts["skeletonMatch"] += rep["skeletonMatch"]
            counts["triangleSpan"] += rep["triangleSpan"]
            counts["ordine3Irreducible"] += rep["ordine3Irreducible"]
        (out / f"{form_id}.json").write_text(dumps(rep))
        statuses.append(entry)
        code = max(code, rc)
    if dup:
        code = max(code, EXIT_INPUT)
    summary = {
        "forms": len(results),
        "ok": sum(1 for s in statuses if s["exitCode"] == EXIT_OK),
        "venkovApplicable": applicable,
        "passCounts": counts,
        "inputErrors": sum(1 for s in statuses if s["status"] == "input-error"),
        "internalErrors": sum(1 for s in statuses if s["status"] == "internal-error"),
        "duplicateIds": dup,
        "statuses": statuses,
        "exitCode": code,
    }
    (out / "summary.json").write_text(json.dumps(summary, indent=1) + "\n")
    return summary, code


def _options(ns) -> PipelineOptions:
    return PipelineOptions(
        down_to_dim=ns.down_to_dim,
        pyramid_tc=not ns.no_pyramid_tc,
        stage=ns.stage,
        timings=ns.timings,
    )


def _add_pipeline_flags(p):
    p.add_argument("--down-to-dim", type=int, default=None, help="compute faces down to this dimension (debug)")
    p.add_argument("--no-pyramid-tc", action="store_true", help="omit 4-cycles around pyramid apexes from the basic cycles")
    p.add_argument("--stage", choices=STAGES, default=None, help="stop after this stage")
    p.add_argument("--timings", action="store_true", help="include per-stage wall times (breaks byte-reproducibility)")
    p.add_argument("--golden", default=None, help="directory of frozen reports to diff against")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="venkov", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="cmd", required=True)

    run = sub.add_parser("run", help="analyse one form file and print its JSON report")
    run.add_argument("form")
    run.add_argument("-o", "--output", default=None, help="write the report here instead of stdout")
    _add_pipeline_flags(run)

    batch = sub.add_parser("batch", help="analyse a directory or list file of form files")
    batch.add_argument("source", help="directory of form files, or a file listing one path per line")
    batch.add_argument("--out", required=True, help="output directory for reports and summary.json")
    batch.add_argument("--jobs", type=int, default=1)
    _add_pipeline_flags(batch)

    gen = sub.add_parser("gen", help="write Gram files for named lattices")
    gen.add_argument("names", nargs="*", default=None, help=f"lattice names ({', '.join(NAMED)}); default all")
    gen.add_argument("--dims", type=int, nargs="+", default=[5])
    gen.add_argument("--out", default=None, help="directory; prints to stdout when omitted")
    return ap


def main(argv=None) -> int:
    ns = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if ns.verbose else logging.WARNING, format="%(levelname)s %(message)s")

    if ns.cmd == "gen":
        names = ns.names or list(NAMED)
        for d in ns.dims:
            for name in names:
                try:
                    text = format_form(named_gram(name, d), f"{name}{d}")
                except (InputError, ValueError) as exc:
                    log.warning("skipping %s%d: %s", name, d, exc)
                    continue
                if ns.out:
                    Path(ns.out).mkdir(parents=True, exist_ok=True)
                    (Path(ns.out) / f"{name}{d}.gram").write_text(text)
                else:
                    sys.stdout.write(text)
        return EXIT_OK

    try:
        opts = _options(ns)
    except ValueError as exc:
        log.error("%s", exc)
        return EXIT_INPUT

    if ns.cmd == "run":
        form_id, rep, code = process_file(ns.form, opts)
        if ns.golden and rep["status"] == "ok":
            why = compare_golden(form_id, rep, ns.golden)
            if why:
                log.error("golden mismatch for %s: %s", form_id, why)
                code = max(code, EXIT_CHECK_FAILED)
        text = dumps(rep)
        if ns.output:
            Path(ns.output).write_text(text)
        else:
            sys.stdout.write(text)
        return code

    try:
        paths = collect_inputs(ns.source)
    except OSError as exc:
        log.error("cannot read %s: %s", ns.source, exc)
        return EXIT_INPUT
    if not paths:
        log.error("no input forms in %s", ns.source)
        return EXIT_INPUT
    summary, code = run_batch(paths, ns.out, max(1, ns.jobs), opts, ns.golden)
    log.info("%d forms, %d ok, exit %d", summary["forms"], summary["ok"], code)
    return code


if __name__ == "__main__":
    sys.exit(main())
