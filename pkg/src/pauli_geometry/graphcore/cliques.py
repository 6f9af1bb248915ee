"""Maximal clique enumeration and clique-intersection graphs."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, bits, mask_of


@dataclass(frozen=True)
class CliqueFamily:
    """Ordered vertex subsets of ``parent`` (each a sorted tuple)."""

    parent: Graph
    cliques: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.cliques)

    def __iter__(self):
        return iter(self.cliques)

    def __getitem__(self, i):
        return self.cliques[i]

    @property
    def masks(self) -> list[int]:
        return [mask_of(c) for c in self.cliques]

    def sizes(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for c in self.cliques:
            out[len(c)] = out.get(len(c), 0) + 1
        return dict(sorted(out.items()))

    def labels(self) -> list[tuple[str, ...]]:
        return [tuple(self.parent.labels[v] for v in c) for c in self.cliques]

    def label_sets(self) -> set[frozenset[str]]:
        return {frozenset(c) for c in self.labels()}

    def subfamily(self, indices) -> "CliqueFamily":
        return CliqueFamily(self.parent, tuple(self.cliques[i] for i in indices))

    def verify(self) -> None:
        """Raise if some member is not a clique or not maximal in ``parent``."""
        g = self.parent
        for c in self.cliques:
            m = mask_of(c)
            if not g.is_clique(c):
                raise ValueError(f"{c} is not a clique")
            common = (1 << g.n) - 1
            for v in c:
                common &= g.adj[v]
            if common & ~m:
                raise ValueError(f"{c} is not maximal")


def _degeneracy_order(adj: list[int], n: int) -> list[int]:
    deg = [a.bit_count() for a in adj]
    alive = (1 << n) - 1
    order = []
    for _ in range(n):
        v = min(bits(alive), key=lambda u: (deg[u], u))
        order.append(v)
        alive &= ~(1 << v)
        for u in bits(adj[v] & alive):
            deg[u] -= 1
    return order


def _expand(adj, r: int, p: int, x: int, out: list[int]) -> None:
    # Bron-Kerbosch with the Tomita pivot: u maximising |P & N(u)| over P | X
    if not p and not x:
        out.append(r)
        return
    best, pivot = -1, 0
    for u in bits(p | x):
        c = (p & adj[u]).bit_count()
        if c > best:
            best, pivot = c, u
    for v in bits(p & ~adj[pivot]):
        nv = adj[v]
        _expand(adj, r | 1 << v, p & nv, x & nv, out)
        p &= ~(1 << v)
        x |= 1 << v


def maximal_cliques(g: Graph) -> CliqueFamily:
    """All maximal cliques, each listed once, in canonical order.

    Canonical order: every clique is a sorted vertex tuple and the family is
    sorted lexicographically.
    """
    adj = list(g.adj)
    found: list[int] = []
    later = (1 << g.n) - 1
    for v in _degeneracy_order(adj, g.n):
        later &= ~(1 << v)
        earlier = ((1 << g.n) - 1) & ~later & ~(1 << v)
        _expand(adj, 1 << v, adj[v] & later, adj[v] & earlier, found)
    cliques = sorted(tuple(bits(m)) for m in found)
    return CliqueFamily(g, tuple(cliques))


def intersection_graph(family: CliqueFamily, k: int) -> Graph:
    """Graph on the cliques of ``family``; edge iff two cliques share exactly ``k`` vertices.

    ``k = 0`` gives the dual graph.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    masks = family.masks
    adj = [0] * len(masks)
    for a, b in combinations(range(len(masks)), 2):
        if (masks[a] & masks[b]).bit_count() == k:
            adj[a] |= 1 << b
            adj[b] |= 1 << a
    labels = ["{" + ",".join(c) + "}" for c in family.labels()]
    return Graph(adj, labels, check=False)


def dual_graph(family: CliqueFamily) -> Graph:
    return intersection_graph(family, 0)
