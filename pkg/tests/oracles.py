"""Independent reference implementations for the tests.

Groups are rebuilt as concrete matrices (permutation matrices, or complex
monomial matrices for the dicyclic family) and every element name is evaluated
as a word in them.  Nothing here reads the library's multiplication table except
to compare against it.
"""

from __future__ import annotations

import itertools
import re
from collections import deque

import numpy as np

_TOKEN = re.compile(r"([a-z])(?:\^(\d+))?")


def perm_matrix(images: list[int]) -> np.ndarray:
    """Row-action matrix: ``e_i @ P = e_{images[i]}``, so ``P @ Q`` is "P then Q"."""
    k = len(images)
    m = np.zeros((k, k), dtype=np.int64)
    m[np.arange(k), images] = 1
    return m


def cycles_to_images(k: int, cycles) -> list[int]:
    images = list(range(k))
    for c in cycles:
        for i, u in enumerate(c):
            images[u] = c[(i + 1) % len(c)]
    return images


def dihedral_gens(n: int) -> dict[str, np.ndarray]:
    a = perm_matrix([(i + 1) % n for i in range(n)])
    b = perm_matrix([(-i) % n for i in range(n)])
    return {"a": a, "b": b}


def dicyclic_gens(m: int) -> dict[str, np.ndarray]:
    z = np.exp(1j * np.pi / m)
    a = np.array([[z, 0], [0, np.conj(z)]])
    b = np.array([[0, -1], [1, 0]], dtype=complex)
    return {"a": a, "b": b}


def alternating_gens(k: int) -> dict[str, np.ndarray]:
    spec = {
        3: {"b": [(0, 1, 2)]},
        4: {"a": [(0, 1), (2, 3)], "b": [(0, 1, 2)]},
        5: {"a": [(0, 1), (2, 3)], "b": [(0, 2, 4)]},
        6: {"a": [(0, 1), (2, 3)], "b": [(0, 1, 2, 4), (3, 5)]},
    }[k]
    return {name: perm_matrix(cycles_to_images(k, cyc)) for name, cyc in spec.items()}


def symmetric_gens(k: int) -> dict[str, np.ndarray]:
    gens = {}
    if k >= 2:
        gens["a"] = perm_matrix(cycles_to_images(k, [(0, 1)]))
    if k >= 3:
        gens["b"] = perm_matrix(cycles_to_images(k, [tuple(range(k))]))
    return gens


def cyclic_gens(k: int) -> dict[str, np.ndarray]:
    return {"a": perm_matrix([(i + 1) % k for i in range(k)])}


def eval_word(name: str, gens: dict[str, np.ndarray], dim: int) -> np.ndarray:
    out = np.eye(dim, dtype=next(iter(gens.values())).dtype) if gens else np.eye(dim)
    if name == "1":
        return out
    pos = 0
    for m in _TOKEN.finditer(name):
        assert m.start() == pos, f"unparsed text in {name!r}"
        pos = m.end()
        out = out @ np.linalg.matrix_power(gens[m.group(1)], int(m.group(2) or 1))
    assert pos == len(name), f"unparsed text in {name!r}"
    return out


def matrices_for(G, gens: dict[str, np.ndarray]) -> list[np.ndarray]:
    dim = next(iter(gens.values())).shape[0] if gens else 1
    return [eval_word(nm, gens, dim) for nm in G.names]


def _key(m: np.ndarray) -> bytes:
    # adding 0.0 turns -0.0 into 0.0 so equal matrices hash equally
    return (np.round(m, 8) + 0.0).tobytes()


def check_representation(G, gens: dict[str, np.ndarray]) -> None:
    """Names evaluate to distinct matrices and the table multiplies like them."""
    mats = matrices_for(G, gens)
    keys = [_key(m) for m in mats]
    assert len(set(keys)) == G.order, "names do not evaluate to distinct elements"
    lookup = {k: i for i, k in enumerate(keys)}
    for x in range(G.order):
        for y in range(G.order):
            prod = _key(mats[x] @ mats[y])
            assert lookup.get(prod) == int(G.mul[x, y]), (G.names[x], G.names[y])


def gens_for(G) -> dict[str, np.ndarray]:
    fam, (p,) = G.tag.family, G.tag.params
    return {
        "D": dihedral_gens,
        "Q": dicyclic_gens,
        "A": alternating_gens,
        "S": symmetric_gens,
        "C": cyclic_gens,
    }[fam](p)


# ---------------------------------------------------------------------------
# subgroups by brute force over subsets


def brute_force_subgroups(G) -> set[tuple[int, ...]]:
    """Every subset containing 1, closed under products, of size dividing |G|."""
    n = G.order
    rest = list(range(1, n))
    found = set()
    for size in range(1, n + 1):
        if n % size:
            continue
        for combo in itertools.combinations(rest, size - 1):
            s = (0,) + combo
            ss = set(s)
            if all(int(G.mul[x, y]) in ss for x in s for y in s):
                found.add(s)
    return found


# ---------------------------------------------------------------------------
# graph by definition, distances by plain BFS


def naive_commutator(mats, x: int, y: int) -> np.ndarray:
    inv = np.linalg.inv
    return inv(mats[x]) @ inv(mats[y]) @ mats[x] @ mats[y]


def naive_delta(G, gens, H_members, g: int) -> tuple[list[int], set[frozenset[int]]]:
    """Vertex list and edge set computed from matrices, not from the table."""
    mats = matrices_for(G, gens)
    H = set(H_members)
    central = {
        h for h in H
        if all(np.allclose(mats[h] @ mats[y], mats[y] @ mats[h]) for y in range(G.order))
    }
    verts = [x for x in range(G.order) if x not in central]
    gm, gim = mats[g], np.linalg.inv(mats[g])
    edges = set()
    for x, y in itertools.combinations(verts, 2):
        if x not in H and y not in H:
            continue
        c = naive_commutator(mats, x, y)
        if not (np.allclose(c, gm) or np.allclose(c, gim)):
            edges.add(frozenset((x, y)))
    return verts, edges


def bfs_all(verts: list[int], edges: set[frozenset[int]]) -> dict[tuple[int, int], int]:
    nbrs = {v: [] for v in verts}
    for e in edges:
        u, v = tuple(e)
        nbrs[u].append(v)
        nbrs[v].append(u)
    dist = {}
    for s in verts:
        seen = {s: 0}
        q = deque([s])
        while q:
            u = q.popleft()
            for w in nbrs[u]:
                if w not in seen:
                    seen[w] = seen[u] + 1
                    q.append(w)
        for t, d in seen.items():
            dist[s, t] = d
    return dist


def naive_diameter(verts, edges) -> float:
    dist = bfs_all(verts, edges)
    if len(dist) < len(verts) ** 2:
        return float("inf")
    return max(dist.values(), default=0)
