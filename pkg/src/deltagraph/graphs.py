"""Dense undirected graphs and the invariants the theorems quantify over."""

from __future__ import annotations

import math
import re
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

INF = math.inf


@dataclass(frozen=True, eq=False)
class UGraph:
    """Simple undirected graph on labelled vertices.

    ``adjacency[i, j]`` refers to vertex positions; ``vertex_labels[i]`` is the
    element index the position stands for.
    """

    vertex_labels: tuple[int, ...]
    adjacency: np.ndarray

    def __post_init__(self):
        adj = np.asarray(self.adjacency, dtype=bool)
        n = len(self.vertex_labels)
        if adj.shape != (n, n):
            raise ValueError(f"adjacency shape {adj.shape} does not match {n} vertices")
        if not (adj == adj.T).all():
            raise ValueError("adjacency is not symmetric")
        if adj.diagonal().any():
            raise ValueError("adjacency has loops")
        if len(set(self.vertex_labels)) != n:
            raise ValueError("vertex labels are not unique")
        adj.setflags(write=False)
        object.__setattr__(self, "adjacency", adj)

    @classmethod
    def from_edges(cls, n: int, edges: Sequence[tuple[int, int]], labels: Sequence[int] | None = None) -> UGraph:
        adj = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            adj[u, v] = adj[v, u] = True
        return cls(tuple(labels) if labels is not None else tuple(range(n)), adj)

    @property
    def n_vertices(self) -> int:
        return len(self.vertex_labels)

    @property
    def n_edges(self) -> int:
        return int(self.adjacency.sum()) // 2

    def position(self, label: int) -> int:
        return self.vertex_labels.index(label)

    def adjacent(self, x: int, y: int) -> bool:
        """Adjacency by vertex label."""
        return bool(self.adjacency[self.position(x), self.position(y)])

    def degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as position pairs ``(i, j)`` with ``i < j`` in lexicographic order."""
        iu, ju = np.nonzero(np.triu(self.adjacency, 1))
        return list(zip(iu.tolist(), ju.tolist()))


@dataclass(frozen=True)
class GraphReport:
    n_vertices: int
    n_edges: int
    connected: bool
    diameter: float  # int when connected, INF otherwise
    is_tree: bool
    is_star: bool
    is_complete: bool
    is_empty_edgeset: bool
    isolated: tuple[int, ...]
    degree: dict[int, int]

    def as_dict(self) -> dict:
        return {
            "n_vertices": self.n_vertices,
            "n_edges": self.n_edges,
            "connected": self.connected,
            "diameter": "inf" if self.diameter == INF else int(self.diameter),
            "is_tree": self.is_tree,
            "is_star": self.is_star,
            "is_complete": self.is_complete,
            "is_empty_edgeset": self.is_empty_edgeset,
            "isolated": list(self.isolated),
        }


def bfs_distances(g: UGraph, src: int) -> list[float]:
    """Hop distances from vertex position ``src``; ``INF`` when unreachable."""
    dist = [INF] * g.n_vertices
    dist[src] = 0
    frontier = [src]
    nbrs = [np.flatnonzero(row).tolist() for row in g.adjacency]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            for v in nbrs[u]:
                if dist[v] == INF:
                    dist[v] = d
                    nxt.append(v)
        frontier = nxt
    return dist


def all_pairs_distances(g: UGraph) -> np.ndarray:
    """Distance matrix (int) with ``-1`` for unreachable pairs.

    Level-synchronous BFS from every source at once using boolean products.
    """
    n = g.n_vertices
    adj = g.adjacency.astype(np.int32)
    dist = np.full((n, n), -1, dtype=np.int32)
    reached = np.eye(n, dtype=bool)
    frontier = reached.copy()
    d = 0
    while frontier.any():
        dist[frontier] = d
        d += 1
        frontier = ((frontier.astype(np.int32) @ adj) > 0) & ~reached
        reached |= frontier
    return dist


def diameter(g: UGraph) -> float:
    if g.n_vertices == 0:
        return 0
    dist = all_pairs_distances(g)
    if (dist < 0).any():
        return INF
    return int(dist.max())


def analyze(g: UGraph) -> GraphReport:
    n = g.n_vertices
    m = g.n_edges
    deg = g.degrees()
    diam = diameter(g)
    connected = diam != INF
    is_tree = connected and n >= 1 and m == n - 1
    is_star = is_tree and n >= 2 and int(deg.max()) == n - 1
    return GraphReport(
        n_vertices=n,
        n_edges=m,
        connected=connected,
        diameter=diam,
        is_tree=is_tree,
        is_star=is_star,
        is_complete=m == n * (n - 1) // 2,
        is_empty_edgeset=m == 0,
        isolated=tuple(g.vertex_labels[i] for i in np.flatnonzero(deg == 0)) if n > 1 else (),
        degree={g.vertex_labels[i]: int(deg[i]) for i in range(n)},
    )


def find_cycle(g: UGraph) -> list[int] | None:
    """Some cycle as a closed walk of vertex labels (first == last), or None.

    Edges are added to a spanning forest in order; the first edge joining two
    vertices already in one tree closes a cycle with the forest path between them.
    """
    n = g.n_vertices
    root = list(range(n))

    def find(x: int) -> int:
        while root[x] != x:
            root[x] = root[root[x]]
            x = root[x]
        return x

    forest: list[list[int]] = [[] for _ in range(n)]
    for u, v in g.edges():
        ru, rv = find(u), find(v)
        if ru != rv:
            root[ru] = rv
            forest[u].append(v)
            forest[v].append(u)
            continue
        # forest path v -> u, then close with the edge u-v
        prev = {v: -1}
        queue = [v]
        for x in queue:
            for y in forest[x]:
                if y not in prev:
                    prev[y] = x
                    queue.append(y)
        path = [u]
        while path[-1] != v:
            path.append(prev[path[-1]])
        return [g.vertex_labels[i] for i in path + [u]]
    return None


def has_walk(g: UGraph, labels: Sequence[int]) -> bool:
    """True iff consecutive labels (cyclically) are adjacent and all distinct."""
    if len(set(labels)) != len(labels):
        return False
    return all(g.adjacent(labels[i], labels[(i + 1) % len(labels)]) for i in range(len(labels)))


# ---------------------------------------------------------------------------
# DOT


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: UGraph, names: Sequence[str], name: str = "delta", comment: str | None = None) -> str:
    """Deterministic DOT text: vertices and edges in element index order."""
    lines = [f"graph {name} {{"]
    if comment is not None:
        lines.append(f"  // {comment}")
        lines.append(f"  graph [comment={_quote(comment)}];")
    for lab in g.vertex_labels:
        lines.append(f"  v{lab} [label={_quote(names[lab])}];")
    for i, j in g.edges():
        lines.append(f"  v{g.vertex_labels[i]} -- v{g.vertex_labels[j]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


_DOT_NODE = re.compile(r"^\s*(v\d+)\s*\[label=")
_DOT_EDGE = re.compile(r"^\s*(v\d+)\s*--\s*(v\d+)\s*;")


def parse_dot(text: str) -> tuple[list[str], list[tuple[str, str]]]:
    """Read back node ids and edges from :func:`to_dot` output."""
    nodes, edges = [], []
    for line in text.splitlines():
        if m := _DOT_EDGE.match(line):
            edges.append((m.group(1), m.group(2)))
        elif m := _DOT_NODE.match(line):
            nodes.append(m.group(1))
    return nodes, edges
