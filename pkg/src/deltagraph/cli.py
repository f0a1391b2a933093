"""Command line: ``deltagraph {info,subgroups,delta,sweep,verify,export}``.

Sweep CSV columns, in order::

    group,h_order,h_gens,g,admissible,connected,diameter,tree,star,edges,isolated_count

Rows are sorted by (|H|, H members, g index).  Exit codes: 0 ok, 1 a suite
failed, 2 usage, 3 bad descriptor, 4 size cap, 5 unknown element, 6 bad selector.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from .delta import Admissibility, DeltaGraphSpec, admissibility, build
from .errors import DeltaGraphError, SelectorError, SizeCapError
from .graphs import INF, analyze, to_dot
from .groups import IDENTITY, MAX_ORDER, GroupTable, conjugacy_classes, order_profile, parse_group
from .subgroups import describe_subgroup, select_subgroups
from .verify import SCHEMA_VERSION, SUITES, default_jobs, figure_cases, figure_dot, resolve_suite, run_suites

SWEEP_COLUMNS = ("group", "h_order", "h_gens", "g", "admissible", "connected",
                 "diameter", "tree", "star", "edges", "isolated_count")


def _group(args) -> GroupTable:
    G = parse_group(args.group)
    if G.order > args.max_order:
        raise SizeCapError(f"{G.descriptor} has order {G.order} > --max-order {args.max_order}")
    return G


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).parent.mkdir(parents=True, exist_ok=True)
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _g_values(G: GroupTable, base: DeltaGraphSpec, sel: str) -> list[int]:
    if sel == "all-admissible":
        return sorted(base.k_hg)
    if sel == "all":
        return list(range(G.order))
    return [G.index(sel)]


def cmd_info(args) -> int:
    G = _group(args)
    classes = conjugacy_classes(G)
    data = {
        "schema": SCHEMA_VERSION,
        "group": G.descriptor,
        "order": G.order,
        "abelian": G.is_abelian,
        "center": [G.names[z] for z in G.center.members],
        "order_profile": {str(o): c for o, c in order_profile(G)},
        "classes": [[G.names[x] for x in c] for c in classes],
    }
    if args.format == "json":
        _emit(json.dumps(data, indent=2) + "\n", args.out)
        return 0
    lines = [
        f"group    {G.descriptor}",
        f"order    {G.order}",
        f"abelian  {G.is_abelian}",
        f"center   {{{', '.join(data['center'])}}}",
        "orders   " + " ".join(f"{o}:{c}" for o, c in order_profile(G)),
        f"classes  {len(classes)}",
    ]
    lines += [f"  [{len(c)}] " + " ".join(G.names[x] for x in c) for c in classes]
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_subgroups(args) -> int:
    G = _group(args)
    subs = select_subgroups(G, args.subgroup)
    rows = [{"order": H.order, "gens": describe_subgroup(G, H),
             "members": [G.names[x] for x in H.members]} for H in subs]
    if args.format == "json":
        _emit(json.dumps({"schema": SCHEMA_VERSION, "group": G.descriptor,
                          "count": len(rows), "subgroups": rows}, indent=2) + "\n", args.out)
    else:
        lines = [f"{G.descriptor}: {len(rows)} subgroups"]
        lines += [f"  |H|={r['order']:<4} {r['gens']:<20} {{{', '.join(r['members'])}}}" for r in rows]
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def _single_spec(args) -> DeltaGraphSpec:
    G = _group(args)
    subs = select_subgroups(G, args.subgroup)
    if len(subs) != 1:
        raise SelectorError(f"{args.subgroup!r} selects {len(subs)} subgroups; delta needs exactly one")
    return DeltaGraphSpec(G, subs[0], G.index(args.g))


def cmd_delta(args) -> int:
    spec = _single_spec(args)
    G = spec.group
    graph = build(spec)
    rep = analyze(graph)
    if args.format == "dot":
        d = spec.describe()
        _emit(to_dot(graph, G.names, comment=f"group={d['group']}; H={d['H']}; g={d['g']}"), args.out)
        return 0
    data = {"schema": SCHEMA_VERSION, **spec.describe(), "admissibility": admissibility(spec).value,
            **rep.as_dict()}
    data["isolated"] = [G.names[x] for x in rep.isolated]
    if args.format == "json":
        _emit(json.dumps(data, indent=2) + "\n", args.out)
    else:
        width = max(len(k) for k in data)
        _emit("".join(f"{k:<{width}}  {v}\n" for k, v in data.items() if k != "schema"), args.out)
    return 0


def sweep_rows(G: GroupTable, selector: str = "all", g_sel: str = "all-admissible") -> list[dict]:
    """One row per (H, g); sorted by (|H|, H members, g index)."""
    rows = []
    subs = sorted(select_subgroups(G, selector), key=lambda H: (H.order, H.members))
    for H in subs:
        base = DeltaGraphSpec(G, H, IDENTITY)
        gens = describe_subgroup(G, H)
        if g_sel == "all-admissible" and admissibility(base) is Admissibility.H_EQUALS_REL_CENTER:
            continue
        for g in _g_values(G, base, g_sel):
            spec = base.with_g(g)
            rep = analyze(build(spec))
            rows.append({
                "group": G.descriptor,
                "h_order": H.order,
                "h_gens": gens.removeprefix("gen:"),
                "g": G.names[g],
                "admissible": int(admissibility(spec) is Admissibility.ADMISSIBLE),
                "connected": int(rep.connected),
                "diameter": "inf" if rep.diameter == INF else int(rep.diameter),
                "tree": int(rep.is_tree),
                "star": int(rep.is_star),
                "edges": rep.n_edges,
                "isolated_count": len(rep.isolated),
            })
    return rows


def sweep_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=SWEEP_COLUMNS, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def cmd_sweep(args) -> int:
    G = _group(args)
    rows = sweep_rows(G, args.subgroup, args.g)
    if args.format == "json":
        _emit(json.dumps({"schema": SCHEMA_VERSION, "columns": list(SWEEP_COLUMNS), "rows": rows},
                         indent=2) + "\n", args.out)
    else:
        _emit(sweep_csv(rows), args.out)
    return 0


def cmd_verify(args) -> int:
    names = args.suites or list(SUITES)
    try:
        for n in names:
            resolve_suite(n)
    except KeyError as exc:
        known = ", ".join(sorted(SUITES))
        print(f"error: unknown suite {exc.args[0]!r} (known: {known}, or thm-/lem- aliases)", file=sys.stderr)
        return 2
    reports = run_suites(names, jobs=args.jobs, figures_dir=args.figures_dir)
    if args.format == "json":
        body = [r.to_dict(include_elapsed=not args.no_elapsed) for r in reports]
        _emit(json.dumps(body if len(body) > 1 else body[0], indent=2) + "\n", args.out)
    else:
        _emit("".join(r.summary_line() + "\n" for r in reports), args.out)
        for r in reports:
            for f in r.failures[: args.show_failures]:
                print(f"  {r.theorem_id}: {json.dumps(f)}", file=sys.stderr)
    return 1 if any(r.failures for r in reports) else 0


def cmd_export(args) -> int:
    if not args.out:
        print("error: export needs --out", file=sys.stderr)
        return 2
    out = Path(args.out)
    if args.figures:
        out.mkdir(parents=True, exist_ok=True)
        for stem, spec in figure_cases():
            (out / f"{stem}.dot").write_text(figure_dot(spec))
            print(out / f"{stem}.dot")
        return 0
    spec = _single_spec(args)
    d = spec.describe()
    _emit(to_dot(build(spec), spec.group.names, comment=f"group={d['group']}; H={d['H']}; g={d['g']}"), str(out))
    print(out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="deltagraph", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, fmt_choices, fmt_default, subgroup_default="all", g_default="1"):
        sp.add_argument("--group", required=True, help="descriptor, e.g. D:12, Q:8, A:4, S:4, C:6, P:C:2xC:2")
        sp.add_argument("--subgroup", default=subgroup_default, required=subgroup_default is None,
                        help="all | order:k | gen:x,y | members:x,y,...")
        sp.add_argument("--g", default=g_default,
                        help="element name (a^2b, bab^2, 1, ...); sweep also takes all-admissible | all")
        sp.add_argument("--out", help="write to this path instead of stdout")
        sp.add_argument("--format", choices=fmt_choices, default=fmt_default)
        sp.add_argument("--max-order", type=int, default=MAX_ORDER)

    common(sub.add_parser("info", help="order, center, conjugacy classes"), ("text", "json"), "text")
    common(sub.add_parser("subgroups", help="list subgroups"), ("text", "json"), "text")
    common(sub.add_parser("delta", help="build one graph and report on it"), ("text", "json", "dot"), "text",
           subgroup_default=None)
    sp = sub.add_parser("sweep", help="CSV row per (H, g)")
    common(sp, ("csv", "json"), "csv", g_default="all-admissible")

    sp = sub.add_parser("verify", help="run verification suites")
    sp.add_argument("suites", nargs="*", help=f"suite names ({', '.join(SUITES)}) or thm-/lem- aliases")
    sp.add_argument("--jobs", type=int, default=default_jobs())
    sp.add_argument("--out")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.add_argument("--figures-dir", help="also write the A_4 DOT files here")
    sp.add_argument("--no-elapsed", action="store_true", help="omit timings from JSON")
    sp.add_argument("--show-failures", type=int, default=5)

    sp = sub.add_parser("export", help="write DOT")
    sp.add_argument("--figures", action="store_true", help="every A_4 figure case into --out DIR")
    sp.add_argument("--group", default="A:4")
    sp.add_argument("--subgroup", default="gen:1")
    sp.add_argument("--g", default="1")
    sp.add_argument("--out")
    sp.add_argument("--max-order", type=int, default=MAX_ORDER)
    return p


COMMANDS = {
    "info": cmd_info,
    "subgroups": cmd_subgroups,
    "delta": cmd_delta,
    "sweep": cmd_sweep,
    "verify": cmd_verify,
    "export": cmd_export,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except DeltaGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
