"""Run every verification suite and write one JSON report per suite."""

import argparse
from pathlib import Path

from deltagraph.verify import SUITES, run_suites


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="results")
    ap.add_argument("--jobs", type=int, default=None)
    ap.add_argument("suites", nargs="*", default=list(SUITES))
    args = ap.parse_args()

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    reports = run_suites(args.suites, jobs=args.jobs, figures_dir=out / "figures")
    for r in reports:
        (out / f"{r.theorem_id}.json").write_text(r.to_json(include_elapsed=False) + "\n")
        print(r.summary_line())


if __name__ == "__main__":
    main()
