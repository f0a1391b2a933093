"""Subgroup enumeration by closing cyclic subgroups under joins."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field

from .errors import SelectorError, SizeCapError
from .groups import IDENTITY, MAX_ORDER, GroupTable, Subgroup


def generated_subgroup(G: GroupTable, gens: Iterable[int]) -> Subgroup:
    """Smallest subgroup of ``G`` containing ``gens``."""
    gens = sorted({int(g) for g in gens} - {IDENTITY})
    members = {IDENTITY}
    frontier = [IDENTITY]
    # in a finite group, closing {1} under right multiplication by gens is enough
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = int(G.mul[x, g])
                if y not in members:
                    members.add(y)
                    nxt.append(y)
        frontier = nxt
    return Subgroup(tuple(sorted(members)), G.order)


def _bits(members: Iterable[int]) -> int:
    out = 0
    for m in members:
        out |= 1 << m
    return out


def _members(bits: int) -> tuple[int, ...]:
    out, i = [], 0
    while bits:
        if bits & 1:
            out.append(i)
        bits >>= 1
        i += 1
    return tuple(out)


@dataclass(frozen=True)
class SubgroupCatalog:
    subgroups: tuple[Subgroup, ...]
    by_order: dict[int, tuple[int, ...]] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.subgroups)

    def __iter__(self):
        return iter(self.subgroups)

    def of_order(self, k: int) -> list[Subgroup]:
        return [self.subgroups[i] for i in self.by_order.get(k, ())]

    def index(self, H: Subgroup) -> int:
        return self.subgroups.index(H)


def enumerate_subgroups(G: GroupTable) -> SubgroupCatalog:
    """Every subgroup of ``G``, sorted by (order, members).

    Seeds are the cyclic subgroups; each known subgroup is joined with every
    cyclic subgroup it does not already contain until nothing new appears.
    """
    if G.order > MAX_ORDER:
        raise SizeCapError(f"subgroup enumeration is capped at order {MAX_ORDER}")
    cyclic: dict[int, int] = {}  # bits -> a generator
    for x in range(G.order):
        b = _bits(generated_subgroup(G, [x]).members)
        cyclic.setdefault(b, x)
    cyc = list(cyclic.items())

    found = set(cyclic)
    # each subgroup also remembers a generating set so joins are cheap to close
    gensets = {b: ([x] if x != IDENTITY else []) for b, x in cyc}
    work = list(cyclic)
    while work:
        nxt = []
        for A in work:
            for C, x in cyc:
                if C & ~A == 0:
                    continue
                gens = gensets[A] + [x]
                J = _bits(generated_subgroup(G, gens).members)
                if J not in found:
                    found.add(J)
                    gensets[J] = gens
                    nxt.append(J)
        work = nxt

    subs = sorted((Subgroup(_members(b), G.order) for b in found), key=lambda H: (H.order, H.members))
    by_order: dict[int, list[int]] = {}
    for i, H in enumerate(subs):
        by_order.setdefault(H.order, []).append(i)
    return SubgroupCatalog(tuple(subs), {k: tuple(v) for k, v in by_order.items()})


def minimal_generators(G: GroupTable, H: Subgroup) -> list[int]:
    """Greedy generating set: lowest-index elements not yet generated."""
    gens: list[int] = []
    current = {IDENTITY}
    for x in H.members:
        if x not in current:
            gens.append(x)
            current = set(generated_subgroup(G, gens).members)
    return gens


def describe_subgroup(G: GroupTable, H: Subgroup) -> str:
    """Selector string reproducing ``H``, e.g. ``gen:a^2,b``."""
    gens = minimal_generators(G, H)
    return "gen:" + (",".join(G.names[g] for g in gens) if gens else "1")


def select_subgroups(G: GroupTable, selector: str, catalog: SubgroupCatalog | None = None) -> list[Subgroup]:
    """Resolve ``all``, ``order:k``, ``gen:x,y`` or ``members:x,y,...``."""
    sel = selector.strip()
    if sel.startswith("gen:"):
        names = [s for s in sel[4:].split(",") if s]
        return [generated_subgroup(G, [G.index(s) for s in names])]
    if sel.startswith("members:"):
        names = [s for s in sel[8:].split(",") if s]
        elems = [G.index(s) for s in names]
        try:
            return [Subgroup.of(G, elems)]
        except ValueError as exc:
            raise SelectorError(str(exc)) from exc
    catalog = catalog or enumerate_subgroups(G)
    if sel == "all":
        return list(catalog)
    if sel.startswith("order:"):
        try:
            k = int(sel[6:])
        except ValueError:
            raise SelectorError(f"bad order selector {selector!r}") from None
        return catalog.of_order(k)
    raise SelectorError(f"unknown subgroup selector {selector!r}")
