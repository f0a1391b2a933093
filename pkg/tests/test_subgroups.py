import pytest

from deltagraph import SelectorError, SizeCapError, Subgroup, enumerate_subgroups, parse_group, select_subgroups
from deltagraph.subgroups import describe_subgroup, generated_subgroup, minimal_generators

from oracles import brute_force_subgroups

SMALL = ["D:6", "D:8", "Q:8", "D:10", "D:12", "Q:12", "A:4", "D:14", "D:16", "Q:16", "C:12", "S:3"]


@pytest.mark.parametrize("desc, count", [("D:8", 10), ("Q:8", 6), ("A:4", 10), ("D:6", 6), ("S:4", 30)])
def test_counts(desc, count):
    assert len(enumerate_subgroups(parse_group(desc))) == count


@pytest.mark.parametrize("desc", SMALL)
def test_matches_subset_brute_force(desc):
    G = parse_group(desc)
    ours = {H.members for H in enumerate_subgroups(G)}
    assert ours == brute_force_subgroups(G)


def test_order_four_subgroups():
    assert len(enumerate_subgroups(parse_group("D:8")).of_order(4)) == 3
    a4 = enumerate_subgroups(parse_group("A:4"))
    assert len(a4.of_order(4)) == 1
    assert len(a4.of_order(6)) == 0


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
def test_prime_cyclic(p):
    assert len(enumerate_subgroups(parse_group(f"C:{p}"))) == 2


def test_sorted_and_contains_extremes():
    G = parse_group("D:12")
    cat = enumerate_subgroups(G)
    keys = [(H.order, H.members) for H in cat]
    assert keys == sorted(keys)
    assert cat.subgroups[0] == Subgroup.trivial(G)
    assert cat.subgroups[-1] == Subgroup.full(G)


def test_larger_groups_are_closed_and_distinct():
    for desc, count in [("A:5", 59), ("S:5", 156), ("D:24", 34)]:
        G = parse_group(desc)
        cat = enumerate_subgroups(G)
        assert len(cat) == count
        assert len({H.members for H in cat}) == count


def test_generated_subgroup():
    G = parse_group("D:8")
    H = generated_subgroup(G, [G.index("a^2"), G.index("b")])
    assert {G.names[x] for x in H.members} == {"1", "a^2", "b", "a^2b"}
    assert generated_subgroup(G, []).order == 1


def test_describe_round_trip():
    G = parse_group("Q:16")
    for H in enumerate_subgroups(G):
        sel = describe_subgroup(G, H)
        assert select_subgroups(G, sel) == [H]
        assert generated_subgroup(G, minimal_generators(G, H)) == H


def test_selectors():
    G = parse_group("D:8")
    assert len(select_subgroups(G, "all")) == 10
    assert len(select_subgroups(G, "order:2")) == 5
    assert select_subgroups(G, "members:1,a^2")[0].order == 2
    with pytest.raises(SelectorError):
        select_subgroups(G, "members:1,a")
    with pytest.raises(SelectorError):
        select_subgroups(G, "order:x")
    with pytest.raises(SelectorError):
        select_subgroups(G, "every")


def test_cap():
    G = parse_group("A:6")  # 360 > 200
    with pytest.raises(SizeCapError):
        enumerate_subgroups(G)
