"""Regenerate the frozen regression reports under tests/golden/."""

import argparse
from pathlib import Path

from venkov.cli import dumps
from venkov.forms import named_form_file
from venkov.pipeline import run_pipeline

FORMS = [("Z", 4), ("A", 4), ("D", 4), ("Astar", 4), ("Dstar", 4),
         ("Z", 5), ("A", 5), ("D", 5), ("Astar", 5), ("Dstar", 5), ("A", 3), ("Z", 2)]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "tests" / "golden"))
    ns = ap.parse_args()
    out = Path(ns.out)
    out.mkdir(parents=True, exist_ok=True)
    for name, d in FORMS:
        ff = named_form_file(name, d)
        (out / f"{ff.form_id}.json").write_text(dumps(run_pipeline(ff)))
        print("wrote", ff.form_id)


if __name__ == "__main__":
    main()
