"""The relative g-noncommuting graph of a group ``G`` with respect to ``H <= G``.

Vertices are ``G \\ Z(H, G)``.  Distinct ``x, y`` are adjacent iff at least one
of them lies in ``H`` and ``[x, y]`` is neither ``g`` nor ``g^-1``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .groups import (
    IDENTITY,
    GroupTable,
    Subgroup,
    centralizer,
    commutator_set,
    is_conjugate_via,
    relative_center,
)
from .graphs import UGraph
from .subgroups import describe_subgroup


class Admissibility(enum.Enum):
    ADMISSIBLE = "admissible"
    H_EQUALS_REL_CENTER = "H = Z(H,G)"
    G_NOT_IN_K = "g not in K(H,G)"


class DegreeCase(enum.Enum):
    IN_H_TRIVIAL_G = "in-H g=1"
    IN_H_ONE_CONJUGATE = "in-H conj to exactly one of xg, xg^-1"
    IN_H_BOTH_CONJUGATE = "in-H conj to xg and xg^-1"
    IN_H_INVOLUTION = "in-H g^2=1 conj to xg"
    OUT_H_TRIVIAL_G = "out-H g=1"
    OUT_H_ONE_CONJUGATE = "out-H conj via H to exactly one of xg, xg^-1"
    OUT_H_BOTH_CONJUGATE = "out-H conj via H to xg and xg^-1"
    OUT_H_INVOLUTION = "out-H g^2=1 conj via H to xg"
    NOT_COVERED_NEITHER = "not covered: conj to neither xg nor xg^-1"
    NOT_COVERED_INVOLUTION = "not covered: g^2=1 and not conj to xg"


@dataclass(frozen=True)
class DegreeFormula:
    value: int | None
    case: DegreeCase

    @property
    def covered(self) -> bool:
        return self.value is not None


@dataclass(frozen=True, eq=False)
class DeltaGraphSpec:
    group: GroupTable
    subgroup: Subgroup
    g: int

    def __post_init__(self):
        if self.subgroup.parent_order != self.group.order:
            raise ValueError("subgroup belongs to a group of a different order")
        if not 0 <= self.g < self.group.order:
            raise ValueError(f"g={self.g} is not an element of {self.group.descriptor}")

    @cached_property
    def z_hg(self) -> Subgroup:
        return relative_center(self.group, self.subgroup)

    @cached_property
    def k_hg(self) -> frozenset[int]:
        return commutator_set(self.group, self.subgroup)

    @property
    def g_inv(self) -> int:
        return int(self.group.inv[self.g])

    def with_g(self, g: int) -> DeltaGraphSpec:
        spec = DeltaGraphSpec(self.group, self.subgroup, g)
        # share cached derived sets; they do not depend on g
        for attr in ("z_hg", "k_hg"):
            if attr in self.__dict__:
                spec.__dict__[attr] = self.__dict__[attr]
        return spec

    def key(self) -> tuple:
        return (self.group.descriptor, self.subgroup.order, self.subgroup.members, self.g)

    def describe(self) -> dict:
        G = self.group
        return {
            "group": G.descriptor,
            "H": describe_subgroup(G, self.subgroup),
            "H_members": [G.names[h] for h in self.subgroup.members],
            "g": G.names[self.g],
        }

    @cached_property
    def vertices(self) -> tuple[int, ...]:
        z = self.z_hg
        return tuple(x for x in range(self.group.order) if x not in z)


def admissibility(spec: DeltaGraphSpec) -> Admissibility:
    if spec.subgroup.order == spec.z_hg.order:
        return Admissibility.H_EQUALS_REL_CENTER
    if spec.g not in spec.k_hg:
        return Admissibility.G_NOT_IN_K
    return Admissibility.ADMISSIBLE


def adjacency_matrix(spec: DeltaGraphSpec) -> np.ndarray:
    """Adjacency over ``spec.vertices``; never symmetrized after the fact."""
    G = spec.group
    v = np.array(spec.vertices, dtype=np.intp)
    comm = G.comm[np.ix_(v, v)]
    in_h = spec.subgroup.mask[v]
    touches_h = in_h[:, None] | in_h[None, :]
    avoids_g = (comm != spec.g) & (comm != spec.g_inv)
    adj = touches_h & avoids_g
    np.fill_diagonal(adj, False)
    return adj


def build(spec: DeltaGraphSpec) -> UGraph:
    return UGraph(spec.vertices, adjacency_matrix(spec))


def degree_by_formula(spec: DeltaGraphSpec, x: int) -> DegreeFormula:
    """Closed-form degree of vertex ``x`` when a stated case applies.

    Vertices in ``H`` use conjugacy in ``G`` and ``|C_G(x)|``; vertices outside
    ``H`` use conjugacy by elements of ``H`` and ``|C_H(x)|``.  "Conjugate to
    xg or xg^-1" is read as exactly one of the two.
    """
    G, H, g = spec.group, spec.subgroup, spec.g
    if x in spec.z_hg:
        raise ValueError(f"{G.names[x]} lies in Z(H,G) and is not a vertex")
    z = spec.z_hg.order
    inside = x in H
    if inside:
        conj_set = range(G.order)
        c = centralizer(G, x).order
        base = G.order - z - 1
        cases = (DegreeCase.IN_H_TRIVIAL_G, DegreeCase.IN_H_ONE_CONJUGATE,
                 DegreeCase.IN_H_BOTH_CONJUGATE, DegreeCase.IN_H_INVOLUTION)
        trivial = G.order - c
    else:
        conj_set = H.members
        c = centralizer(G, x, H).order
        base = H.order - z
        cases = (DegreeCase.OUT_H_TRIVIAL_G, DegreeCase.OUT_H_ONE_CONJUGATE,
                 DegreeCase.OUT_H_BOTH_CONJUGATE, DegreeCase.OUT_H_INVOLUTION)
        trivial = H.order - c
    trivial_case, one_case, both_case, inv_case = cases

    if g == IDENTITY:
        return DegreeFormula(trivial, trivial_case)
    xg = int(G.mul[x, g])
    to_xg = is_conjugate_via(G, x, xg, conj_set)
    if int(G.mul[g, g]) == IDENTITY:
        if to_xg:
            return DegreeFormula(base - c, inv_case)
        return DegreeFormula(None, DegreeCase.NOT_COVERED_INVOLUTION)
    to_xginv = is_conjugate_via(G, x, int(G.mul[x, spec.g_inv]), conj_set)
    if to_xg and to_xginv:
        return DegreeFormula(base - 2 * c, both_case)
    if to_xg or to_xginv:
        return DegreeFormula(base - c, one_case)
    return DegreeFormula(None, DegreeCase.NOT_COVERED_NEITHER)


def symmetry_check(spec: DeltaGraphSpec) -> bool:
    """The graph for ``g`` and for ``g^-1`` have identical adjacency."""
    a = adjacency_matrix(spec)
    b = adjacency_matrix(spec.with_g(spec.g_inv))
    return bool((a == b).all())


def make_spec(G: GroupTable, H: Subgroup, g: int | str) -> DeltaGraphSpec:
    if isinstance(g, str):
        g = G.index(g)
    return DeltaGraphSpec(G, H, g)
