"""Observed connectivity and diameter for each dihedral family, against the claims."""

import argparse
import json
from collections import defaultdict

from deltagraph.verify import DIHEDRAL_N, verify_dihedral_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, nargs="*", default=list(DIHEDRAL_N))
    ap.add_argument("--jobs", type=int, default=None)
    ap.add_argument("--json", help="write the full report here")
    args = ap.parse_args()

    report = verify_dihedral_suite(args.n, jobs=args.jobs)
    # group observed diameters by "D:2n family"
    table = defaultdict(set)
    for key, d in report.notes["observed_diameters"].items():
        head, _, g = key.rpartition(" g=")
        table[head].add(str(d))
    for head in sorted(table, key=lambda k: (int(k.split()[0][2:]), k)):
        print(f"{head:<48} diam in {{{', '.join(sorted(table[head]))}}}")

    print()
    for f in report.failures:
        print(f"MISMATCH {f['group']:<6} {f['family']:<28} g={f['g']:<6} "
              f"claimed: {f['expected']:<30} observed: {f['observed']}")
    print(report.summary_line())
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(report.to_json())


if __name__ == "__main__":
    main()
