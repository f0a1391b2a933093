"""Finite groups as multiplication tables and the relative g-noncommuting graph."""

from .delta import (
    Admissibility,
    DegreeCase,
    DegreeFormula,
    DeltaGraphSpec,
    admissibility,
    adjacency_matrix,
    build,
    degree_by_formula,
    make_spec,
    symmetry_check,
)
from .errors import DeltaGraphError, DescriptorError, SelectorError, SizeCapError, UnknownElementError
from .graphs import INF, GraphReport, UGraph, analyze, diameter, find_cycle, parse_dot, to_dot
from .groups import (
    IDENTITY,
    MAX_ORDER,
    GroupTable,
    Subgroup,
    all_commutators,
    centralizer,
    commutator,
    commutator_set,
    conjugacy_classes,
    direct_product,
    make_alternating,
    make_cyclic,
    make_dicyclic,
    make_dihedral,
    make_symmetric,
    parse_group,
    relative_center,
)
from .subgroups import enumerate_subgroups, generated_subgroup, select_subgroups
from .verify import VerificationReport, run_suites

__all__ = [name for name in dir() if not name.startswith("_")]
