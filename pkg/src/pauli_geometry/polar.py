"""Symplectic polar spaces W(2n-1, p) and their bridge to n p-dit Pauli graphs.

Coordinates are interleaved as (x1, z1, ..., xn, zn) with the form
<x, y> = sum_i x_{2i} y_{2i+1} - x_{2i+1} y_{2i} (mod p).  The Pauli
observable with components (b_i, c_i) sits over the point (b1, c1, ..., bn, cn),
so the bridge is the identity on coordinates.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product

import numpy as np

from .arith import is_prime
from .graphcore.cliques import CliqueFamily, maximal_cliques
from .graphcore.graph import Graph, bits, mask_of
from .graphcore.automorphism import is_isomorphic
from .pauli import Observable, _commutation_matrix, build_pauli_graph, enumerate_observables, format_label

SIZE_CAP = 3**6 * 9

Vector = tuple[int, ...]


def _normalize(v: Vector, p: int) -> Vector:
    for x in v:
        if x:
            inv = pow(x, -1, p)
            return tuple(y * inv % p for y in v)
    raise ValueError("the zero vector has no projective point")


@dataclass(frozen=True)
class PolarSpace:
    p: int
    n: int
    points: tuple[Vector, ...]  # normalized: first nonzero coordinate is 1
    index: dict = field(compare=False, repr=False)

    def form(self, x: Vector, y: Vector) -> int:
        p = self.p
        return sum(x[2 * i] * y[2 * i + 1] - x[2 * i + 1] * y[2 * i] for i in range(self.n)) % p

    def point_of(self, v: Vector) -> int:
        return self.index[_normalize(tuple(x % self.p for x in v), self.p)]

    def collinear(self, i: int, j: int) -> bool:
        return self.form(self.points[i], self.points[j]) == 0

    @cached_property
    def perp_masks(self) -> tuple[int, ...]:
        """Bitset of points perpendicular to each point (itself included)."""
        v = np.array(self.points, dtype=np.int64)
        x, z = v[:, 0::2], v[:, 1::2]
        gram = (x @ z.T - z @ x.T) % self.p == 0
        return tuple(mask_of(np.flatnonzero(row).tolist()) for row in gram)

    def collinearity_graph(self) -> Graph:
        dims = [self.p] * self.n
        labels = [format_label(Observable(tuple(zip(v[0::2], v[1::2]))), dims) for v in self.points]
        adj = [m & ~(1 << i) for i, m in enumerate(self.perp_masks)]
        return Graph(adj, labels, check=False)

    def span(self, vectors) -> frozenset[int]:
        """Projective points of the span of ``vectors``."""
        p = self.p
        vecs = {(0,) * (2 * self.n)}
        for v in vectors:
            vecs = {tuple((a + k * b) % p for a, b in zip(w, v)) for w in vecs for k in range(p)}
        return frozenset(self.index[_normalize(w, p)] for w in vecs if any(w))


@dataclass(frozen=True)
class GeneratorSet:
    """Maximal totally isotropic subspaces, each as a sorted tuple of point indices."""

    space: PolarSpace
    generators: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def vector_count(self, k: int = 0) -> int:
        """Nonzero vectors of a generator: p^n - 1."""
        return len(self.generators[k]) * (self.space.p - 1)

    def through(self, point: int) -> list[int]:
        return [k for k, g in enumerate(self.generators) if point in g]


@dataclass(frozen=True)
class Spread:
    members: tuple[int, ...]  # indices into the generator set

    def __len__(self) -> int:
        return len(self.members)


def build_polar_space(p: int, n: int) -> PolarSpace:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n < 1:
        raise ValueError("rank must be at least 1")
    if p ** (2 * n) > SIZE_CAP:
        raise ValueError(f"V({2 * n}, {p}) exceeds the size cap {SIZE_CAP}")
    pts = []
    for v in product(range(p), repeat=2 * n):
        if any(v) and _normalize(v, p) == v:
            pts.append(v)
    pts.sort()
    return PolarSpace(p, n, tuple(pts), {v: i for i, v in enumerate(pts)})


def generators(space: PolarSpace) -> GeneratorSet:
    """All generators by depth-first extension of totally isotropic sets.

    A subspace is produced once, from its greedy basis: each new basis point
    is the smallest point of the subspace outside the span so far.
    """
    perp = space.perp_masks
    pts = space.points
    p = space.p
    found: list[tuple[int, ...]] = []

    def extend(depth: int, last: int, vecs: frozenset, span: frozenset[int], allowed: int) -> None:
        if depth == space.n:
            found.append(tuple(sorted(span)))
            return
        for x in bits(allowed >> (last + 1) << (last + 1)):
            if x in span:
                continue
            xv = pts[x]
            new_vecs = frozenset(
                tuple((a + k * b) % p for a, b in zip(w, xv)) for w in vecs for k in range(p)
            )
            new_pts = {space.index[_normalize(w, p)] for w in new_vecs if any(w)} - span
            if min(new_pts) != x:
                continue
            extend(depth + 1, x, new_vecs, span | new_pts, allowed & perp[x])

    extend(0, -1, frozenset({(0,) * (2 * space.n)}), frozenset(), (1 << len(pts)) - 1)
    return GeneratorSet(space, tuple(sorted(found)))


def find_spreads(gs: GeneratorSet, limit: int | None = None) -> list[Spread]:
    """Spreads by exact cover over the points (fewest-candidates column first)."""
    npts = len(gs.space.points)
    rows = {k: g for k, g in enumerate(gs.generators)}
    cols: dict[int, set[int]] = {pt: set() for pt in range(npts)}
    for k, g in rows.items():
        for pt in g:
            cols[pt].add(k)
    out: list[Spread] = []

    def select(k):
        removed = []
        for pt in rows[k]:
            for other in cols[pt]:
                for pt2 in rows[other]:
                    if pt2 != pt:
                        cols[pt2].remove(other)
            removed.append(cols.pop(pt))
        return removed

    def deselect(k, removed):
        for pt in reversed(rows[k]):
            cols[pt] = removed.pop()
            for other in cols[pt]:
                for pt2 in rows[other]:
                    if pt2 != pt:
                        cols[pt2].add(other)

    def solve(partial):
        if limit is not None and len(out) >= limit:
            return
        if not cols:
            out.append(Spread(tuple(sorted(partial))))
            return
        col = min(cols, key=lambda c: (len(cols[c]), c))
        for k in sorted(cols[col]):
            partial.append(k)
            removed = select(k)
            solve(partial)
            deselect(k, removed)
            partial.pop()
            if limit is not None and len(out) >= limit:
                return

    solve([])
    return out


def puncture_point(g: Graph, family: CliqueFamily, u: int) -> tuple[frozenset[int], CliqueFamily]:
    """Remove vertex ``u`` and every clique through it."""
    if not 0 <= u < g.n:
        raise ValueError(f"vertex {u} out of range")
    points = frozenset(range(g.n)) - {u}
    keep = [k for k, c in enumerate(family.cliques) if u not in c]
    return points, family.subfamily(keep)


def puncture_clique(g: Graph, clique) -> Graph:
    """Induced subgraph on the vertices outside ``clique``."""
    clique = list(clique)
    if not g.is_clique(clique):
        raise ValueError("the removed vertex set is not a clique")
    gone = set(clique)
    return g.induced_subgraph([v for v in range(g.n) if v not in gone])


def _point_of_observables(space: PolarSpace, obs) -> list[int]:
    return [space.point_of(o.flat) for o in obs.members]


def polar_pauli_crosscheck(p: int, n: int) -> bool:
    """Check that commutation of n p-dit observables is collinearity in W(2n-1, p).

    Three things must hold: commuting pairs map exactly to collinear point
    pairs; the maximal cliques of the Pauli graph are exactly the nonzero
    vectors of the generators; for p = 2, the two graphs are isomorphic.
    """
    space = build_polar_space(p, n)
    obs = enumerate_observables([p] * n)
    point = _point_of_observables(space, obs)
    comm = _commutation_matrix(obs)
    perp = space.perp_masks
    for i in range(len(obs)):
        row = comm[i]
        pi = perp[point[i]]
        for j in range(len(obs)):
            if bool(row[j]) != bool(pi >> point[j] & 1):
                return False
    gs = generators(space)
    pauli = build_pauli_graph([p] * n)
    cliques = maximal_cliques(pauli)
    by_points = set()
    for c in cliques:
        pts = frozenset(point[v] for v in c)
        if len(c) != len(pts) * (p - 1):
            return False
        by_points.add(tuple(sorted(pts)))
    if by_points != set(gs.generators) or len(cliques) != len(gs):
        return False
    if p == 2 and not is_isomorphic(space.collinearity_graph(), pauli):
        return False
    return True
