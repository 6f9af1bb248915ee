"""Undirected simple graphs on bitset adjacency.

Vertex ``i``'s neighbourhood is the Python int ``adj[i]`` whose bit ``j`` is
set iff ``i ~ j``.  Graphs are immutable once built.
"""
from __future__ import annotations

import json
from collections import Counter
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np


def bits(mask: int):
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    __slots__ = ("n", "adj", "labels")

    def __init__(self, adj: Sequence[int], labels: Sequence[str] | None = None, *, check: bool = True):
        self.n = len(adj)
        self.adj = tuple(adj)
        if labels is None:
            labels = [str(i) for i in range(self.n)]
        self.labels = tuple(labels)
        if check:
            self._validate()

    def _validate(self) -> None:
        if len(self.labels) != self.n:
            raise ValueError("one label per vertex required")
        if len(set(self.labels)) != self.n:
            raise ValueError("vertex labels must be unique")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {i} has a neighbour out of range")
            if row >> i & 1:
                raise ValueError(f"self-loop at vertex {i}")
            for j in bits(row):
                if not self.adj[j] >> i & 1:
                    raise ValueError(f"adjacency not symmetric at ({i}, {j})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels=None) -> "Graph":
        adj = [0] * n
        for i, j in edges:
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return cls(adj, labels)

    @classmethod
    def from_matrix(cls, matrix, labels=None) -> "Graph":
        a = np.asarray(matrix)
        adj = [mask_of(np.flatnonzero(row)) for row in a]
        return cls(adj, labels)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count()})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.adj == other.adj and self.labels == other.labels

    def __hash__(self) -> int:
        return hash((self.adj, self.labels))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in bits(self.adj[i] >> (i + 1) << (i + 1))]

    def adjacency_matrix(self, dtype=np.int64) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=dtype)
        for i, j in self.edges():
            a[i, j] = a[j, i] = 1
        return a

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"no vertex labelled {label!r}") from None

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        m = mask_of(vs)
        return all((self.adj[v] | 1 << v) & m == m for v in vs)

    def induced_subgraph(self, vertices: Iterable[int]) -> "Graph":
        """Subgraph on ``vertices`` (kept in the given order) with their labels."""
        vs = list(vertices)
        pos = {v: k for k, v in enumerate(vs)}
        adj = []
        for v in vs:
            adj.append(mask_of(pos[u] for u in bits(self.adj[v]) if u in pos))
        return Graph(adj, [self.labels[v] for v in vs], check=False)

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph([full & ~row & ~(1 << i) for i, row in enumerate(self.adj)], self.labels, check=False)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` moved to position ``perm[v]``."""
        adj = [0] * self.n
        labels = [""] * self.n
        for v in range(self.n):
            adj[perm[v]] = mask_of(perm[u] for u in bits(self.adj[v]))
            labels[perm[v]] = self.labels[v]
        return Graph(adj, labels, check=False)

    # exports

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges()], "labels": list(self.labels)}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), ensure_ascii=False)

    @classmethod
    def from_json(cls, data: dict | str) -> "Graph":
        if isinstance(data, str):
            data = json.loads(data)
        return cls.from_edges(data["n"], [tuple(e) for e in data["edges"]], data.get("labels"))

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        for i, label in enumerate(self.labels):
            lines.append(f'  {i} [label="{label}"];')
        for i, j in self.edges():
            lines.append(f"  {i} -- {j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def degree_histogram(g: Graph) -> dict[int, int]:
    return dict(sorted(Counter(g.degrees()).items()))


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex sets of the components, largest first, ties by smallest vertex."""
    seen = 0
    comps = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = frontier = 1 << v
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(list(bits(comp)))
    comps.sort(key=lambda c: (-len(c), c[0]))
    return comps


# named graphs


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph([full & ~(1 << i) for i in range(n)], check=False)


def empty(n: int) -> Graph:
    return Graph([0] * n, check=False)


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def line_graph(g: Graph) -> Graph:
    edges = g.edges()
    labels = [f"{g.labels[i]}-{g.labels[j]}" for i, j in edges]
    adj = [0] * len(edges)
    for a, b in combinations(range(len(edges)), 2):
        if set(edges[a]) & set(edges[b]):
            adj[a] |= 1 << b
            adj[b] |= 1 << a
    return Graph(adj, labels, check=False)


def complement(g: Graph) -> Graph:
    return g.complement()


def complete_multipartite(parts: Sequence[int]) -> Graph:
    part_of = [k for k, size in enumerate(parts) for _ in range(size)]
    n = len(part_of)
    edges = [(i, j) for i, j in combinations(range(n), 2) if part_of[i] != part_of[j]]
    return Graph.from_edges(n, edges)


def cocktail_party(m: int) -> Graph:
    """K_{2,2,...,2} with ``m`` parts: 2m vertices, (2m-2)-regular."""
    return complete_multipartite([2] * m)


def hypercube(d: int) -> Graph:
    n = 1 << d
    edges = [(v, v ^ (1 << k)) for v in range(n) for k in range(d) if v < v ^ (1 << k)]
    return Graph.from_edges(n, edges, [format(v, f"0{d}b") for v in range(n)] if d else None)


_NAMED = {
    "complete": complete,
    "empty": empty,
    "cycle": cycle,
    "line_graph": line_graph,
    "complement": complement,
    "complete_multipartite": complete_multipartite,
    "cocktail_party": cocktail_party,
    "hypercube": hypercube,
}


def named_graph(kind: str, arg) -> Graph:
    """Build a standard graph by name, e.g. ``named_graph("cocktail_party", 15)``."""
    try:
        build = _NAMED[kind]
    except KeyError:
        raise ValueError(f"unknown graph family {kind!r}; choose from {sorted(_NAMED)}") from None
    return build(arg)
