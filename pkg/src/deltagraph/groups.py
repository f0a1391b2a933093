"""Finite groups stored as multiplication tables.

Elements are integer indices into an immutable table; index 0 is always the
identity. Names are kept for display and for parsing element selectors on the
command line, nothing else.
"""

from __future__ import annotations

import math
import re
from collections.abc import Callable, Hashable, Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import DescriptorError, SizeCapError, UnknownElementError

MAX_ORDER = 200
IDENTITY = 0


@dataclass(frozen=True)
class GroupTag:
    """Construction descriptor, e.g. ``GroupTag("D", (6,))`` for D_12."""

    family: str
    params: tuple = ()

    def descriptor(self) -> str:
        if self.family == "P":
            return "P:" + "x".join(t.descriptor().removeprefix("P:") for t in self.params)
        if self.family == "D":
            return f"D:{2 * self.params[0]}"
        if self.family == "Q":
            return f"Q:{4 * self.params[0]}"
        return f"{self.family}:{self.params[0]}"


@dataclass(frozen=True, eq=False)
class GroupTable:
    order: int
    mul: np.ndarray
    inv: np.ndarray
    names: tuple[str, ...]
    tag: GroupTag
    generators: dict[str, int] = field(default_factory=dict)
    identity: int = IDENTITY

    def __post_init__(self):
        for arr in (self.mul, self.inv):
            arr.setflags(write=False)

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"GroupTable({self.descriptor}, order={self.order})"

    @property
    def descriptor(self) -> str:
        return self.tag.descriptor()

    @cached_property
    def _name_index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.names)}

    @cached_property
    def comm(self) -> np.ndarray:
        """Full commutator table: ``comm[x, y] = x^-1 y^-1 x y``."""
        left = self.mul[self.inv[:, None], self.inv[None, :]]
        table = self.mul[left, self.mul]
        table.setflags(write=False)
        return table

    @cached_property
    def center(self) -> Subgroup:
        commutes = (self.mul == self.mul.T).all(axis=1)
        return Subgroup(tuple(int(i) for i in np.flatnonzero(commutes)), self.order)

    @cached_property
    def is_abelian(self) -> bool:
        return bool((self.mul == self.mul.T).all())

    @cached_property
    def orders(self) -> tuple[int, ...]:
        return tuple(_element_order(self, x) for x in range(self.order))

    def name(self, x: int) -> str:
        return self.names[x]

    def index(self, name: str) -> int:
        """Parse an element name such as ``a^2b`` (or the shorthand ``a2b``)."""
        key = normalize_name(name)
        try:
            return self._name_index[key]
        except KeyError:
            raise UnknownElementError(
                f"no element named {name!r} in {self.descriptor}"
            ) from None

    def power(self, x: int, k: int) -> int:
        if k < 0:
            x, k = int(self.inv[x]), -k
        result = IDENTITY
        for _ in range(k):
            result = int(self.mul[result, x])
        return result

    def product(self, *xs: int) -> int:
        result = IDENTITY
        for x in xs:
            result = int(self.mul[result, x])
        return result

    def word(self, text: str) -> int:
        """Evaluate a word over the named generators, e.g. ``"b^2ab"``."""
        result = IDENTITY
        for letter, exp in re.findall(r"([a-z])(?:\^?(-?\d+))?", normalize_name(text)):
            if letter not in self.generators:
                raise UnknownElementError(f"{letter!r} is not a generator of {self.descriptor}")
            result = int(self.mul[result, self.power(self.generators[letter], int(exp or 1))])
        return result

    def check_axioms(self, associativity: bool = True) -> None:
        """Raise ``AssertionError`` unless the table is a group table.

        Associativity is checked exhaustively, one left factor at a time.
        """
        n, mul, inv = self.order, self.mul, self.inv
        ar = np.arange(n)
        assert mul.shape == (n, n)
        assert (np.sort(mul, axis=0) == ar[:, None]).all(), "columns are not permutations"
        assert (np.sort(mul, axis=1) == ar[None, :]).all(), "rows are not permutations"
        assert (mul[IDENTITY] == ar).all() and (mul[:, IDENTITY] == ar).all()
        assert (mul[ar, inv] == IDENTITY).all() and (mul[inv, ar] == IDENTITY).all()
        if associativity:
            for x in range(n):
                xy = mul[x]  # x*y for every y
                assert (mul[xy] == mul[x][mul]).all(), f"associativity fails at x={x}"


@dataclass(frozen=True)
class Subgroup:
    members: tuple[int, ...]
    parent_order: int

    def __post_init__(self):
        if list(self.members) != sorted(set(self.members)):
            object.__setattr__(self, "members", tuple(sorted(set(self.members))))

    @classmethod
    def of(cls, G: GroupTable, members: Iterable[int]) -> Subgroup:
        """Build and validate a subgroup of ``G``."""
        H = cls(tuple(sorted(set(int(m) for m in members))), G.order)
        if not is_subgroup(G, H.members):
            raise ValueError(f"{[G.names[m] for m in H.members]} is not a subgroup of {G.descriptor}")
        return H

    @classmethod
    def full(cls, G: GroupTable) -> Subgroup:
        return cls(tuple(range(G.order)), G.order)

    @classmethod
    def trivial(cls, G: GroupTable) -> Subgroup:
        return cls((IDENTITY,), G.order)

    @property
    def order(self) -> int:
        return len(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, x) -> bool:
        return x in self._set

    @cached_property
    def _set(self) -> frozenset[int]:
        return frozenset(self.members)

    @cached_property
    def mask(self) -> np.ndarray:
        m = np.zeros(self.parent_order, dtype=bool)
        m[list(self.members)] = True
        m.setflags(write=False)
        return m


@dataclass(frozen=True)
class ElementInfo:
    index: int
    order: int
    is_central: bool


def is_subgroup(G: GroupTable, members: Sequence[int]) -> bool:
    s = set(members)
    if IDENTITY not in s:
        return False
    idx = np.fromiter(s, dtype=np.intp)
    if not set(G.inv[idx].tolist()) <= s:
        return False
    return set(np.unique(G.mul[np.ix_(idx, idx)]).tolist()) <= s


# ---------------------------------------------------------------------------
# element-level operations


def commutator(G: GroupTable, x: int, y: int) -> int:
    """Index of ``x^-1 y^-1 x y``."""
    return int(G.comm[x, y])


def _element_order(G: GroupTable, x: int) -> int:
    k, y = 1, x
    while y != IDENTITY:
        y = int(G.mul[y, x])
        k += 1
    return k


def element_order(G: GroupTable, x: int) -> int:
    return G.orders[x]


def element_info(G: GroupTable, x: int) -> ElementInfo:
    return ElementInfo(x, G.orders[x], x in G.center)


def centralizer(G: GroupTable, x: int, S: Subgroup | None = None) -> Subgroup:
    """``{s in S : sx = xs}``; ``S`` defaults to the whole group."""
    cand = np.flatnonzero(G.mul[x] == G.mul[:, x])
    if S is not None:
        cand = cand[S.mask[cand]]
    return Subgroup(tuple(int(i) for i in cand), G.order)


def relative_center(G: GroupTable, H: Subgroup) -> Subgroup:
    """Elements of ``H`` commuting with all of ``G``, i.e. ``H ∩ Z(G)``."""
    return Subgroup(tuple(x for x in H.members if x in G.center), G.order)


def commutator_set(G: GroupTable, H: Subgroup) -> frozenset[int]:
    """All ``[x, y]`` with ``x`` in ``H`` and ``y`` in ``G``, or the other way round.

    Since ``[y, x] = [x, y]^-1`` the second half is the inverse image of the first.
    """
    rows = np.unique(G.comm[list(H.members)])
    return frozenset(rows.tolist()) | frozenset(G.inv[rows].tolist())


def all_commutators(G: GroupTable) -> frozenset[int]:
    """Every commutator ``[x, y]`` with ``x, y`` in ``G``."""
    return frozenset(np.unique(G.comm).tolist())


def is_conjugate_via(G: GroupTable, x: int, y: int, S: Iterable[int]) -> bool:
    """True iff ``s^-1 x s = y`` for some ``s`` in ``S``."""
    for s in S:
        if G.mul[G.mul[G.inv[s], x], s] == y:
            return True
    return False


def conjugacy_classes(G: GroupTable) -> list[tuple[int, ...]]:
    """Classes sorted by smallest member."""
    seen: set[int] = set()
    out = []
    for x in range(G.order):
        if x in seen:
            continue
        cls = tuple(sorted({int(G.mul[G.mul[G.inv[s], x], s]) for s in range(G.order)}))
        seen.update(cls)
        out.append(cls)
    return out


def order_profile(G: GroupTable) -> tuple[tuple[int, int], ...]:
    """Multiset of element orders; the only isomorphism invariant we use."""
    counts: dict[int, int] = {}
    for o in G.orders:
        counts[o] = counts.get(o, 0) + 1
    return tuple(sorted(counts.items()))


def normalize_name(name: str) -> str:
    """Canonical display form: ``a2b`` -> ``a^2b``, ``a^1`` -> ``a``, ``e`` -> ``1``."""
    s = name.strip().replace(" ", "")
    if s in ("e", "id", ""):
        return "1"
    s = re.sub(r"(?<=[a-z])(\d+)", r"^\1", s)
    s = re.sub(r"\^1(?!\d)", "", s)
    return s


# ---------------------------------------------------------------------------
# constructors


def _render(syllables: Sequence[tuple[str, int]]) -> str:
    if not syllables:
        return "1"
    return "".join(letter if p == 1 else f"{letter}^{p}" for letter, p in syllables)


def _from_generators(
    gens: Sequence[tuple[str, Hashable]],
    compose: Callable[[Hashable, Hashable], Hashable],
    identity: Hashable,
    tag: GroupTag,
) -> GroupTable:
    """Close a set of concrete generators and tabulate the result.

    Elements are ordered by the shortest syllable word reaching them (ties broken
    by generator order then exponent), and named by that word.
    """
    gen_powers = []
    for letter, g in gens:
        powers = [g]
        while powers[-1] != identity:
            powers.append(compose(powers[-1], g))
        gen_powers.append((letter, powers[:-1]))  # g^1 .. g^(o-1)

    elements = [identity]
    words: list[tuple[tuple[str, int], ...]] = [()]
    seen = {identity: 0}
    layer = [0]
    while layer:
        nxt = []
        for i in layer:
            last = words[i][-1][0] if words[i] else None
            for letter, powers in gen_powers:
                if letter == last:
                    continue
                for p, gp in enumerate(powers, start=1):
                    e = compose(elements[i], gp)
                    if e not in seen:
                        seen[e] = len(elements)
                        elements.append(e)
                        words.append(words[i] + ((letter, p),))
                        nxt.append(seen[e])
                        if len(elements) > MAX_ORDER * 2:
                            raise SizeCapError(f"{tag.descriptor()} is too large to tabulate")
        layer = nxt

    n = len(elements)
    mul = np.empty((n, n), dtype=np.int16)
    for i, x in enumerate(elements):
        for j, y in enumerate(elements):
            mul[i, j] = seen[compose(x, y)]
    inv = np.argmax(mul == IDENTITY, axis=1).astype(np.int16)
    names = tuple(_render(w) for w in words)
    generators = {letter: seen[powers[0]] for letter, powers in gen_powers}
    return GroupTable(n, mul, inv, names, tag, generators)


def _check_table(G: GroupTable, relations: Iterable[tuple[str, bool]]) -> GroupTable:
    assoc = G.order <= 64
    try:
        G.check_axioms(associativity=assoc)
    except AssertionError as exc:
        raise RuntimeError(f"{G.descriptor}: bad multiplication table: {exc}") from exc
    for label, ok in relations:
        if not ok:
            raise RuntimeError(f"{G.descriptor}: relation {label} fails")
    return G


def _metacyclic(n: int, twist: int, tag: GroupTag, rot_name: str = "a") -> GroupTable:
    """Table of ``<a, b>`` with ``a^n = 1``, ``b a b^-1 = a^-1`` and ``b^2 = a^twist``.

    Layout: ``a^i`` at index ``i``, ``a^i b`` at index ``n + i``.
    """
    order = 2 * n
    i = np.arange(order) % n
    s = np.arange(order) // n
    # (a^i b^s)(a^j b^t) = a^(i + (-1)^s j + s*t*twist) b^((s+t) mod 2)
    sign = np.where(s == 1, -1, 1)
    exp = (i[:, None] + sign[:, None] * i[None, :] + (s[:, None] * s[None, :]) * twist) % n
    mul = (exp + n * ((s[:, None] + s[None, :]) % 2)).astype(np.int16)
    inv = np.argmax(mul == IDENTITY, axis=1).astype(np.int16)
    names = tuple(
        ("1" if k == 0 else "a" if k == 1 else f"a^{k}")
        if side == 0
        else ("b" if k == 0 else "ab" if k == 1 else f"a^{k}b")
        for side in (0, 1)
        for k in range(n)
    )
    return GroupTable(order, mul, inv, names, tag, {"a": 1, "b": n})


def make_dihedral(n: int) -> GroupTable:
    """Dihedral group of order ``2n``: ``a^n = b^2 = 1``, ``b a b^-1 = a^-1``."""
    if n < 3:
        raise ValueError(f"dihedral group needs n >= 3, got {n}")
    if 2 * n > MAX_ORDER:
        raise SizeCapError(f"D:{2 * n} exceeds the order cap {MAX_ORDER}")
    G = _metacyclic(n, 0, GroupTag("D", (n,)))
    a, b = 1, n
    return _check_table(G, [
        ("a^n = 1", G.power(a, n) == IDENTITY and G.orders[a] == n),
        ("b^2 = 1", G.power(b, 2) == IDENTITY and b != IDENTITY),
        ("bab^-1 = a^-1", G.product(b, a, int(G.inv[b])) == G.inv[a]),
    ])


def make_dicyclic(m: int) -> GroupTable:
    """Dicyclic group of order ``4m``: ``a^2m = 1``, ``b^2 = a^m``, ``b a b^-1 = a^-1``."""
    if m < 2:
        raise ValueError(f"dicyclic group needs m >= 2, got {m}")
    if 4 * m > MAX_ORDER:
        raise SizeCapError(f"Q:{4 * m} exceeds the order cap {MAX_ORDER}")
    G = _metacyclic(2 * m, m, GroupTag("Q", (m,)))
    a, b = 1, 2 * m
    return _check_table(G, [
        ("a^2m = 1", G.orders[a] == 2 * m),
        ("b^2 = a^m", G.power(b, 2) == G.power(a, m)),
        ("bab^-1 = a^-1", G.product(b, a, int(G.inv[b])) == G.inv[a]),
    ])


def make_cyclic(k: int) -> GroupTable:
    if k < 1:
        raise ValueError(f"cyclic group needs k >= 1, got {k}")
    if k > MAX_ORDER:
        raise SizeCapError(f"C:{k} exceeds the order cap {MAX_ORDER}")
    ar = np.arange(k)
    mul = ((ar[:, None] + ar[None, :]) % k).astype(np.int16)
    inv = ((-ar) % k).astype(np.int16)
    names = tuple("1" if i == 0 else "a" if i == 1 else f"a^{i}" for i in range(k))
    gens = {"a": 1} if k > 1 else {}
    G = GroupTable(k, mul, inv, names, GroupTag("C", (k,)), gens)
    return _check_table(G, [("a^k = 1", k == 1 or G.orders[1] == k)])


def _perm_compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """``p`` then ``q``."""
    return tuple(q[i] for i in p)


def _cycle(k: int, *cycles: Sequence[int]) -> tuple[int, ...]:
    p = list(range(k))
    for c in cycles:
        for u, v in zip(c, list(c[1:]) + [c[0]]):
            p[u] = v
    return tuple(p)


# Generators per degree; for k = 4, a is a double transposition and b a 3-cycle
# so that a^2 = b^3 = (ab)^3 = 1.
_ALT_GENS = {
    3: [("b", (0, 1, 2))],
    4: [("a", [(0, 1), (2, 3)]), ("b", [(0, 1, 2)])],
    5: [("a", [(0, 1), (2, 3)]), ("b", [(0, 2, 4)])],
    6: [("a", [(0, 1), (2, 3)]), ("b", [(0, 1, 2, 4), (3, 5)])],
}


def make_alternating(k: int) -> GroupTable:
    if not 3 <= k <= 6:
        raise ValueError(f"alternating group degree must be in 3..6, got {k}")
    ident = tuple(range(k))
    gens = []
    for letter, cycles in _ALT_GENS[k]:
        if isinstance(cycles[0], int):
            cycles = [cycles]
        gens.append((letter, _cycle(k, *cycles)))
    G = _from_generators(gens, _perm_compose, ident, GroupTag("A", (k,)))
    rel = [("|A_k| = k!/2", G.order == math.factorial(k) // 2)]
    if k == 4:
        a, b = G.generators["a"], G.generators["b"]
        rel += [
            ("a^2 = 1", G.orders[a] == 2),
            ("b^3 = 1", G.orders[b] == 3),
            ("(ab)^3 = 1", G.orders[G.product(a, b)] == 3),
        ]
    return _check_table(G, rel)


def make_symmetric(k: int) -> GroupTable:
    if not 1 <= k <= 5:
        raise ValueError(f"symmetric group degree must be in 1..5, got {k}")
    ident = tuple(range(k))
    gens = []
    if k >= 2:
        gens.append(("a", _cycle(k, (0, 1))))
    if k >= 3:
        gens.append(("b", _cycle(k, tuple(range(k)))))
    G = _from_generators(gens, _perm_compose, ident, GroupTag("S", (k,)))
    return _check_table(G, [("|S_k| = k!", G.order == math.factorial(k))])


def direct_product(G1: GroupTable, G2: GroupTable) -> GroupTable:
    """``G1 x G2`` with ``(x, y)`` at index ``x * |G2| + y``."""
    n1, n2 = G1.order, G2.order
    if n1 * n2 > MAX_ORDER:
        raise SizeCapError(f"{G1.descriptor} x {G2.descriptor} has order {n1 * n2} > {MAX_ORDER}")
    m1 = G1.mul.astype(np.intp)
    m2 = G2.mul.astype(np.intp)
    mul = (m1[:, None, :, None] * n2 + m2[None, :, None, :]).reshape(n1 * n2, n1 * n2)
    inv = (G1.inv.astype(np.intp)[:, None] * n2 + G2.inv.astype(np.intp)[None, :]).ravel()
    names = tuple(f"({x},{y})" for x in G1.names for y in G2.names)
    gens = {}
    for letter, g in G1.generators.items():
        gens[f"({G1.names[g]},1)"] = g * n2
    for letter, g in G2.generators.items():
        gens[f"(1,{G2.names[g]})"] = g
    parts = tuple(t for G in (G1, G2) for t in (G.tag.params if G.tag.family == "P" else (G.tag,)))
    G = GroupTable(n1 * n2, mul.astype(np.int16), inv.astype(np.int16), names, GroupTag("P", parts), gens)
    return _check_table(G, [])


# ---------------------------------------------------------------------------
# descriptors

_DESC = re.compile(r"^([DQASC]):(\d+)$")


def parse_group(desc: str) -> GroupTable:
    """Build a group from a descriptor such as ``D:12``, ``Q:8`` or ``P:C:2xC:2``."""
    desc = desc.strip()
    if desc.startswith("P:"):
        parts = desc[2:].split("x")
        if len(parts) < 2:
            raise DescriptorError(f"product descriptor needs two factors: {desc!r}")
        G = parse_group(parts[0])
        for p in parts[1:]:
            G = direct_product(G, parse_group(p))
        return G
    m = _DESC.match(desc)
    if not m:
        raise DescriptorError(f"cannot parse group descriptor {desc!r}")
    family, k = m.group(1), int(m.group(2))
    try:
        if family == "D":
            if k % 2:
                raise DescriptorError(f"D:<order> needs an even order, got {k}")
            return make_dihedral(k // 2)
        if family == "Q":
            if k % 4:
                raise DescriptorError(f"Q:<order> needs an order divisible by 4, got {k}")
            return make_dicyclic(k // 4)
        if family == "A":
            return make_alternating(k)
        if family == "S":
            return make_symmetric(k)
        return make_cyclic(k)
    except SizeCapError:
        raise
    except ValueError as exc:
        if isinstance(exc, DescriptorError):
            raise
        raise DescriptorError(str(exc)) from exc
