"""Write every A_4 figure graph as DOT and print its shape."""

import argparse

from deltagraph.graphs import analyze
from deltagraph.verify import figure_cases, reproduce_figures
from deltagraph.delta import admissibility, build


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="figures")
    args = ap.parse_args()

    report = reproduce_figures(args.out)
    for stem, spec in figure_cases():
        r = analyze(build(spec))
        shape = "star" if r.is_star else "tree" if r.is_tree else "connected" if r.connected else "disconnected"
        iso = ",".join(spec.group.names[x] for x in r.isolated) or "-"
        print(f"{stem:<16} V={r.n_vertices:<3} E={r.n_edges:<3} {shape:<12} isolated={iso:<14} "
              f"{admissibility(spec).value}")
    print(report.summary_line())


if __name__ == "__main__":
    main()
