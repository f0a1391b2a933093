"""Vertices whose degree no closed-form case covers, with the degrees actually observed.

For each uncovered vertex this prints the observed degree next to the two
candidate formulas (one subtraction and two subtractions of the centralizer
size), which shows whether either would have fit.
"""

import argparse
from collections import Counter

from deltagraph.delta import Admissibility, DeltaGraphSpec, admissibility, build, degree_by_formula
from deltagraph.groups import centralizer, parse_group
from deltagraph.subgroups import enumerate_subgroups
from deltagraph.verify import ORDER_16


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--groups", nargs="*", default=list(ORDER_16))
    ap.add_argument("--verbose", action="store_true")
    args = ap.parse_args()

    tally = Counter()
    for desc in args.groups:
        G = parse_group(desc)
        for H in enumerate_subgroups(G):
            base = DeltaGraphSpec(G, H, 0)
            if admissibility(base) is not Admissibility.ADMISSIBLE:
                continue
            for g in sorted(base.k_hg):
                spec = base.with_g(g)
                graph = build(spec)
                deg = dict(zip(graph.vertex_labels, graph.degrees().tolist()))
                for x in spec.vertices:
                    f = degree_by_formula(spec, x)
                    if f.covered:
                        continue
                    inside = x in H
                    c = centralizer(G, x, None if inside else H).order
                    base_val = (G.order - spec.z_hg.order - 1) if inside else (H.order - spec.z_hg.order)
                    fit = ("base" if deg[x] == base_val else "one" if deg[x] == base_val - c
                           else "two" if deg[x] == base_val - 2 * c else "other")
                    tally[f.case.value, "in H" if inside else "out of H", fit] += 1
                    if args.verbose:
                        print(f"{desc:<6} H={[G.names[h] for h in H.members]} g={G.names[g]} x={G.names[x]} "
                              f"deg={deg[x]} base={base_val} |C|={c}")
    for (case, side, fit), n in sorted(tally.items()):
        print(f"{n:>5}  {case:<45} {side:<9} observed degree = {fit}")


if __name__ == "__main__":
    main()
