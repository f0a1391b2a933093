import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from deltagraph import (
    IDENTITY,
    Admissibility,
    DegreeCase,
    DeltaGraphSpec,
    Subgroup,
    admissibility,
    adjacency_matrix,
    analyze,
    build,
    degree_by_formula,
    enumerate_subgroups,
    make_spec,
    parse_group,
    symmetry_check,
)
from deltagraph.subgroups import generated_subgroup

from oracles import gens_for, naive_delta


def sub(G, *gens):
    return generated_subgroup(G, [G.index(s) for s in gens])


def spec(desc, gens, g):
    G = parse_group(desc)
    return make_spec(G, sub(G, *gens), g)


def names(G, xs):
    return {G.names[x] for x in xs}


# admissibility


def test_center_subgroup_is_inadmissible():
    G = parse_group("D:8")
    assert admissibility(make_spec(G, G.center, "1")) is Admissibility.H_EQUALS_REL_CENTER


def test_d6_reflection_rotation_admissible():
    assert admissibility(spec("D:6", ["b"], "a")) is Admissibility.ADMISSIBLE


def test_a4_three_cycle_not_in_k():
    assert admissibility(spec("A:4", ["a"], "b")) is Admissibility.G_NOT_IN_K


def test_a4_own_involution_not_in_k():
    # [a, x] is never a, so g = a lies outside K(<a>, A_4)
    for g in ("a", "bab^2", "b^2ab"):
        assert admissibility(spec("A:4", [g], g)) is Admissibility.G_NOT_IN_K


# build


def test_d6_star():
    s = spec("D:6", ["b"], "1")
    G = s.group
    graph = build(s)
    assert names(G, graph.vertex_labels) == {"b", "a", "a^2", "ab", "a^2b"}
    r = analyze(graph)
    assert r.is_star and r.n_edges == 4
    assert r.degree[G.index("b")] == 4


@pytest.mark.parametrize("g", ["a", "bab^2", "b^2ab"])
def test_a4_own_subgroup_star(g):
    s = spec("A:4", [g], g)
    r = analyze(build(s))
    assert r.is_star and r.n_vertices == 11 and r.n_edges == 10
    assert r.degree[s.group.index(g)] == 10


def test_d8_reflection_isolates_a2():
    s = spec("D:8", ["ab"], "1")
    assert s.group.index("a^2") in analyze(build(s)).isolated


def test_d10_reflection_g_a_disconnected():
    s = spec("D:10", ["ab"], "a")
    r = analyze(build(s))
    assert not r.connected
    assert s.group.index("a^2") in r.isolated


def test_d6_reflection_g_rotation_empty():
    assert analyze(build(spec("D:6", ["b"], "a"))).is_empty_edgeset


def test_g_not_in_k_is_join_pattern():
    G = parse_group("A:4")
    for H in enumerate_subgroups(G):
        for g in range(G.order):
            s = DeltaGraphSpec(G, H, g)
            if admissibility(s) is not Admissibility.G_NOT_IN_K:
                continue
            v = np.array(s.vertices)
            in_h = H.mask[v]
            expect = in_h[:, None] | in_h[None, :]
            np.fill_diagonal(expect, False)
            assert (adjacency_matrix(s) == expect).all()


def test_bad_spec():
    G = parse_group("D:8")
    with pytest.raises(ValueError):
        DeltaGraphSpec(G, Subgroup.full(parse_group("D:6")), 0)
    with pytest.raises(ValueError):
        DeltaGraphSpec(G, Subgroup.full(G), 8)


@pytest.mark.parametrize("desc", ["D:6", "D:8", "Q:8", "A:4", "Q:12"])
def test_build_matches_matrix_definition(desc):
    G = parse_group(desc)
    gens = gens_for(G)
    for H in enumerate_subgroups(G):
        for g in range(0, G.order, 3):
            s = DeltaGraphSpec(G, H, g)
            graph = build(s)
            verts, edges = naive_delta(G, gens, H.members, g)
            assert list(graph.vertex_labels) == verts
            ours = {frozenset((graph.vertex_labels[i], graph.vertex_labels[j])) for i, j in graph.edges()}
            assert ours == edges


# degrees


def test_degree_d10_rotation():
    s = spec("D:10", ["a"], "1")
    f = degree_by_formula(s, s.group.index("a"))
    assert f.value == 5 and f.case is DegreeCase.IN_H_TRIVIAL_G
    assert analyze(build(s)).degree[s.group.index("a")] == 5


def test_degree_d6_outside():
    s = spec("D:6", ["a"], "1")
    b = s.group.index("b")
    f = degree_by_formula(s, b)
    assert f.value == 2 and f.case is DegreeCase.OUT_H_TRIVIAL_G
    assert analyze(build(s)).degree[b] == 2


def test_degree_involution_case():
    # some admissible spec with g^2 = 1 and x in H conjugate to xg
    hits = 0
    for desc in ("D:8", "D:12", "D:16"):
        G = parse_group(desc)
        for H in enumerate_subgroups(G):
            base = DeltaGraphSpec(G, H, 0)
            for g in base.k_hg:
                if g == IDENTITY or G.mul[g, g] != IDENTITY:
                    continue
                s = base.with_g(g)
                deg = analyze(build(s)).degree
                for x in s.vertices:
                    f = degree_by_formula(s, x)
                    if f.case is DegreeCase.IN_H_INVOLUTION:
                        hits += 1
                        c_g = sum(1 for y in range(G.order) if G.comm[x, y] == IDENTITY)
                        assert f.value == G.order - s.z_hg.order - c_g - 1
                        assert f.value == deg[x]
    assert hits > 0


def test_degree_not_a_vertex():
    G = parse_group("D:8")
    s = make_spec(G, Subgroup.full(G), "1")
    with pytest.raises(ValueError):
        degree_by_formula(s, G.index("a^2"))


# symmetry


def test_symmetry_examples():
    assert symmetry_check(spec("D:10", ["a"], "a"))
    a = spec("D:10", ["a"], "a")
    assert (adjacency_matrix(a) == adjacency_matrix(a.with_g(a.group.index("a^4")))).all()
    b = spec("D:6", ["a"], "a")
    assert (adjacency_matrix(b) == adjacency_matrix(b.with_g(b.group.index("a^2")))).all()


CORPUS = ["D:6", "D:8", "Q:8", "D:10", "D:12", "Q:12", "A:4", "D:16", "Q:16", "S:4"]


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(CORPUS), st.data())
def test_adjacency_symmetric_and_g_inverse(desc, data):
    G = parse_group(desc)
    cat = enumerate_subgroups(G)
    H = data.draw(st.sampled_from(cat.subgroups))
    g = data.draw(st.integers(0, G.order - 1))
    s = DeltaGraphSpec(G, H, g)
    adj = adjacency_matrix(s)
    assert (adj == adj.T).all() and not adj.diagonal().any()
    assert symmetry_check(s)
    # two vertices outside H are never adjacent
    out = ~H.mask[np.array(s.vertices)]
    assert not adj[np.ix_(out, out)].any()
    # an isolated vertex outside H meets every vertex of H in g or g^-1
    for i, x in enumerate(s.vertices):
        if x not in H and not adj[i].any():
            assert all(G.comm[x, h] in (g, G.inv[g]) for h in H.members if h not in s.z_hg)


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(CORPUS), st.data())
def test_covered_formula_matches_degree(desc, data):
    G = parse_group(desc)
    H = data.draw(st.sampled_from(enumerate_subgroups(G).subgroups))
    base = DeltaGraphSpec(G, H, 0)
    if admissibility(base) is not Admissibility.ADMISSIBLE:
        return
    g = data.draw(st.sampled_from(sorted(base.k_hg)))
    s = base.with_g(g)
    deg = analyze(build(s)).degree
    for x in s.vertices:
        f = degree_by_formula(s, x)
        if f.covered:
            assert f.value == deg[x], (G.names[x], f.case)


def test_pair_count_equals_edge_count():
    s = spec("Q:16", ["b"], "a^4")
    G = s.group
    count = 0
    for x, y in itertools.combinations(s.vertices, 2):
        if (x in s.subgroup or y in s.subgroup) and G.comm[x, y] not in (s.g, s.g_inv):
            count += 1
    assert analyze(build(s)).n_edges == count


@pytest.mark.parametrize("desc", ["D:8", "Q:8", "D:12", "Q:12", "A:4", "D:16", "Q:16"])
def test_uncovered_vertices_have_full_degree(desc):
    # y^-1 x y = xg exactly when [x, y] = g, so with no such conjugate nothing is removed
    G = parse_group(desc)
    for H in enumerate_subgroups(G):
        base = DeltaGraphSpec(G, H, 0)
        if admissibility(base) is not Admissibility.ADMISSIBLE:
            continue
        for g in base.k_hg:
            s = base.with_g(g)
            deg = analyze(build(s)).degree
            for x in s.vertices:
                if degree_by_formula(s, x).covered:
                    continue
                full = G.order - s.z_hg.order - 1 if x in H else H.order - s.z_hg.order
                assert deg[x] == full
