"""Automorphism groups and canonical labelling by individualization-refinement.

The search tree is the usual one: a node is an ordered partition of the
vertices, refined to the coarsest equitable partition; children
individualize each vertex of a target cell.  Leaves are discrete
partitions, i.e. vertex orderings.

``automorphism_order`` walks the first path of the tree and, level by level
from the bottom, decides for every vertex ``w`` of the target cell whether
some automorphism fixing the path prefix maps the path vertex to ``w``.
The generators found form a strong generating set relative to the base
given by the first path, so the group order is the product of the
basic orbit lengths.

``canonical_form`` searches for the leaf maximising (trace sequence,
permuted adjacency), pruning with the orbits of known automorphisms and
jumping back whenever a leaf proves two subtrees equivalent.
"""
from __future__ import annotations

import hashlib
import math
from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, bits

DEFAULT_BUDGET = 2_000_000
_EQUAL, _BETTER = 0, 1
MAX_VERTICES = 512


class SearchBudgetExceeded(RuntimeError):
    """The search tree grew past the node budget; no answer is returned."""


@dataclass(frozen=True)
class CanonicalForm:
    n: int
    rows: tuple[int, ...]
    labeling: tuple[int, ...]  # labeling[i] is the vertex placed at canonical position i

    @property
    def certificate(self) -> str:
        h = hashlib.sha256(f"{self.n}:".encode())
        h.update(",".join(format(r, "x") for r in self.rows).encode())
        return h.hexdigest()

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, r in enumerate(self.rows) for j in bits(r) if i < j]


@dataclass(frozen=True)
class AutResult:
    order: int
    generators: tuple[tuple[int, ...], ...]
    base: tuple[int, ...]
    orbits: tuple[tuple[int, ...], ...]
    certificate: str | None

    @property
    def generator_count(self) -> int:
        return len(self.generators)

    @property
    def vertex_transitive(self) -> bool:
        return len(self.orbits) <= 1


class _Node:
    __slots__ = ("lab", "cell", "end", "ncells", "trace", "prefix")

    def __init__(self, lab, cell, end, ncells, trace, prefix):
        self.lab = lab  # position -> vertex
        self.cell = cell  # vertex -> start position of its cell
        self.end = end  # start position -> end position (exclusive)
        self.ncells = ncells
        self.trace = trace
        self.prefix = prefix


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if ra > rb:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True

    def add_perm(self, perm: Sequence[int]) -> None:
        for x, y in enumerate(perm):
            if x != y:
                self.union(x, y)


class _Search:
    def __init__(self, g: Graph, colors: Sequence | None, budget: int):
        self.g = g
        self.n = g.n
        self.adj = g.adj
        self.budget = budget
        self.nodes = 0
        self.root = self._root(colors)

    # partition machinery

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise SearchBudgetExceeded(f"search exceeded {self.budget} nodes")

    def _root(self, colors) -> _Node:
        n = self.n
        if colors is None:
            colors = [0] * n
        values = sorted(set(colors))
        lab = sorted(range(n), key=lambda v: (values.index(colors[v]), v))
        cell = [0] * n
        end = [0] * n
        starts = []
        pos = 0
        while pos < n:
            c = colors[lab[pos]]
            stop = pos
            while stop < n and colors[lab[stop]] == c:
                stop += 1
            for p in range(pos, stop):
                cell[lab[p]] = pos
            end[pos] = stop
            starts.append(pos)
            pos = stop
        node = _Node(lab, cell, end, len(starts), (), ())
        trace = self._refine(node, starts)
        node.trace = (tuple(values.index(colors[lab[s]]) for s in starts),) + trace
        return node

    def _refine(self, node: _Node, queue_starts) -> tuple:
        """Refine ``node`` in place to an equitable partition; return the trace."""
        n = self.n
        adj = self.adj
        lab, cell, end = node.lab, node.cell, node.end
        queue = deque(queue_starts)
        queued = set(queue_starts)
        trace = []
        while queue and node.ncells < n:
            s = queue.popleft()
            queued.discard(s)
            w = 0
            for p in range(s, end[s]):
                w |= 1 << lab[p]
            touched = 0
            for v in bits(w):
                touched |= adj[v]
            starts = sorted({cell[v] for v in bits(touched)})
            for a in starts:
                b = end[a]
                if b - a == 1:
                    continue
                groups: dict[int, list[int]] = {}
                for p in range(a, b):
                    v = lab[p]
                    groups.setdefault((adj[v] & w).bit_count(), []).append(v)
                if len(groups) == 1:
                    continue
                keys = sorted(groups)
                trace.append((s, a) + tuple(x for k in keys for x in (k, len(groups[k]))))
                pos = a
                frags = []
                for k in keys:
                    grp = groups[k]
                    frags.append((pos, len(grp)))
                    for v in grp:
                        lab[pos] = v
                        cell[v] = frags[-1][0]
                        pos += 1
                    end[frags[-1][0]] = pos
                node.ncells += len(keys) - 1
                if a in queued:
                    for fs, _ in frags[1:]:
                        queue.append(fs)
                        queued.add(fs)
                else:
                    largest = max(frags, key=lambda f: (f[1], -f[0]))
                    for f in frags:
                        if f is not largest:
                            queue.append(f[0])
                            queued.add(f[0])
        trace.append((node.ncells,))
        return tuple(trace)

    def _child(self, node: _Node, start: int, v: int) -> _Node:
        self._tick()
        lab = list(node.lab)
        cell = list(node.cell)
        end = list(node.end)
        p = lab.index(v, start, end[start])
        lab[start], lab[p] = lab[p], lab[start]
        b = end[start]
        end[start] = start + 1
        end[start + 1] = b
        for q in range(start + 1, b):
            cell[lab[q]] = start + 1
        child = _Node(lab, cell, end, node.ncells + 1, None, node.prefix + (v,))
        child.trace = ((start,),) + self._refine(child, [start])
        return child

    def _target(self, node: _Node) -> int | None:
        best = None
        p = 0
        while p < self.n:
            e = node.end[p]
            size = e - p
            if size > 1 and (best is None or size < best[1]):
                best = (p, size)
                if size == 2:
                    break
            p = e
        return None if best is None else best[0]

    def _cell_vertices(self, node: _Node, start: int) -> list[int]:
        return sorted(node.lab[start : node.end[start]])

    def _rows(self, lab: list[int]) -> tuple[int, ...]:
        pos = [0] * self.n
        for i, v in enumerate(lab):
            pos[v] = i
        rows = []
        for v in lab:
            r = 0
            for u in bits(self.adj[v]):
                r |= 1 << pos[u]
            rows.append(r)
        return tuple(rows)

    def _perm(self, lab_from: list[int], lab_to: list[int]) -> tuple[int, ...]:
        perm = [0] * self.n
        for a, b in zip(lab_from, lab_to):
            perm[a] = b
        return tuple(perm)

    def _is_automorphism(self, perm) -> bool:
        adj = self.adj
        for v in range(self.n):
            img = 0
            for u in bits(adj[v]):
                img |= 1 << perm[u]
            if img != adj[perm[v]]:
                return False
        return True

    # automorphism group

    def first_path(self):
        node = self.root
        path = []
        while True:
            t = self._target(node)
            if t is None:
                return path, node
            v = self._cell_vertices(node, t)[0]
            path.append((node, t, v))
            node = self._child(node, t, v)

    def group(self):
        path, leaf = self.first_path()
        self.path = path
        self.first_leaf = leaf
        self.first_rows = self._rows(leaf.lab)
        path_traces = [self._child_trace(i) for i in range(len(path))]
        self.path_traces = path_traces
        gens: list[tuple[int, ...]] = []
        uf = _UnionFind(self.n)
        order = 1
        for level in range(len(path) - 1, -1, -1):
            node, t, v = path[level]
            failed: list[int] = []
            for w in self._cell_vertices(node, t):
                if uf.find(w) == uf.find(v):
                    continue
                if any(uf.find(w) == uf.find(f) for f in failed):
                    continue
                gamma = self._find_equivalent(self._child(node, t, w), level + 1, gens)
                if gamma is None:
                    failed.append(w)
                else:
                    gens.append(gamma)
                    uf.add_perm(gamma)
            root_v = uf.find(v)
            order *= sum(1 for w in self._cell_vertices(node, t) if uf.find(w) == root_v)
        orbits_uf = _UnionFind(self.n)
        for gamma in gens:
            orbits_uf.add_perm(gamma)
        classes: dict[int, list[int]] = {}
        for x in range(self.n):
            classes.setdefault(orbits_uf.find(x), []).append(x)
        orbits = tuple(sorted(tuple(c) for c in classes.values()))
        base = tuple(v for _, _, v in path)
        return order, tuple(gens), base, orbits

    def _child_trace(self, level: int):
        node, t, v = self.path[level]
        nxt = self.path[level + 1][0] if level + 1 < len(self.path) else self.first_leaf
        return nxt.trace

    def _find_equivalent(self, node: _Node, depth: int, gens) -> tuple[int, ...] | None:
        """An automorphism mapping the first leaf into the subtree of ``node``, if any."""
        if node.trace != self.path_traces[depth - 1]:
            return None
        t = self._target(node)
        if t is None:
            if self._rows(node.lab) == self.first_rows:
                gamma = self._perm(self.first_leaf.lab, node.lab)
                assert self._is_automorphism(gamma)
                return gamma
            return None
        if t != self.path[depth][1]:
            return None
        stab = [g for g in gens if all(g[x] == x for x in node.prefix)]
        uf = None
        if stab:
            uf = _UnionFind(self.n)
            for g in stab:
                uf.add_perm(g)
        tried: list[int] = []
        for u in self._cell_vertices(node, t):
            if uf is not None and any(uf.find(u) == uf.find(x) for x in tried):
                continue
            tried.append(u)
            gamma = self._find_equivalent(self._child(node, t, u), depth + 1, gens)
            if gamma is not None:
                return gamma
        return None

    # canonical labelling

    def canonical(self, gens) -> tuple[tuple[int, ...], list[int]]:
        self.gens = list(gens)
        self.best_traces: list = []
        self.best_rows = None
        self.best_lab = None
        self.best_prefix = ()
        self.best_version = 0
        self.stack_traces: list = []
        self._canon(self.root, 0, _BETTER)
        return self.best_rows, self.best_lab

    def _canon(self, node: _Node, depth: int, state: int) -> int | None:
        """Explore ``node``; return a depth to jump back to, or None.

        ``state`` says whether the traces above ``node`` equal those of the
        best path so far or already beat them.
        """
        if state == _EQUAL:
            bt = self.best_traces[depth]
            if node.trace < bt:
                return None
            if node.trace > bt:
                state = _BETTER
        self.stack_traces.append(node.trace)
        try:
            t = self._target(node)
            if t is None:
                return self._leaf(node, state)
            version = self.best_version
            tried: list[int] = []
            ngens = -1
            uf = None
            for u in self._cell_vertices(node, t):
                if len(self.gens) != ngens:
                    ngens = len(self.gens)
                    uf = _UnionFind(self.n)
                    for g in self.gens:
                        if all(g[x] == x for x in node.prefix):
                            uf.add_perm(g)
                if any(uf.find(u) == uf.find(x) for x in tried):
                    continue
                tried.append(u)
                if self.best_version != version:
                    # the best leaf now lies below this node
                    version = self.best_version
                    state = _EQUAL
                jump = self._canon(self._child(node, t, u), depth + 1, state)
                if jump is not None and jump < depth:
                    return jump
            return None
        finally:
            self.stack_traces.pop()

    def _leaf(self, node: _Node, state: int) -> int | None:
        rows = self._rows(node.lab)
        if state == _EQUAL:
            if rows < self.best_rows:
                return None
            if rows == self.best_rows:
                gamma = self._perm(self.best_lab, node.lab)
                assert self._is_automorphism(gamma)
                self.gens.append(gamma)
                return self._common_prefix(self.best_prefix, node.prefix)
        self.best_rows = rows
        self.best_lab = list(node.lab)
        self.best_prefix = node.prefix
        self.best_traces = list(self.stack_traces)
        self.best_version += 1
        return None

    @staticmethod
    def _common_prefix(a, b) -> int:
        k = 0
        while k < len(a) and k < len(b) and a[k] == b[k]:
            k += 1
        return k


def _check_size(g: Graph, max_vertices: int) -> None:
    if g.n > max_vertices:
        raise ValueError(f"graph has {g.n} vertices; the search is budgeted for at most {max_vertices}")


class _Twins:
    """Quotient of ``g`` by twin classes.

    Vertices with equal open neighbourhoods (false twins) or equal closed
    neighbourhoods (true twins) and equal colours are interchangeable, so
    every permutation inside a class is an automorphism.  The search runs on
    one representative per class, coloured by (colour, kind, class size).
    """

    def __init__(self, g: Graph, colors: Sequence | None):
        base = [0] * g.n if colors is None else list(colors)
        classes: list[list[int]] = []
        kinds: list[int] = []
        seen = [False] * g.n
        for kind, key in ((1, lambda v: g.adj[v]), (2, lambda v: g.adj[v] | 1 << v)):
            groups: dict = {}
            for v in range(g.n):
                if not seen[v]:
                    groups.setdefault((base[v], key(v)), []).append(v)
            for members in groups.values():
                if len(members) > 1:
                    classes.append(members)
                    kinds.append(kind)
                    for v in members:
                        seen[v] = True
        for v in range(g.n):
            if not seen[v]:
                classes.append([v])
                kinds.append(0)
        classes_kinds = sorted(zip(classes, kinds), key=lambda ck: ck[0][0])
        self.classes = [c for c, _ in classes_kinds]
        self.kinds = [k for _, k in classes_kinds]
        self.trivial = len(self.classes) == g.n
        reps = [c[0] for c in self.classes]
        self.quotient = g.induced_subgraph(reps)
        self.colors = [(base[c[0]], k, len(c)) for c, k in zip(self.classes, self.kinds)]
        self.g = g

    def lift_perm(self, perm) -> tuple[int, ...]:
        out = list(range(self.g.n))
        for i, j in enumerate(perm):
            for a, b in zip(self.classes[i], self.classes[j]):
                out[a] = b
        return tuple(out)

    def internal_generators(self) -> list[tuple[int, ...]]:
        gens = []
        for c in self.classes:
            if len(c) < 2:
                continue
            swap = list(range(self.g.n))
            swap[c[0]], swap[c[1]] = c[1], c[0]
            gens.append(tuple(swap))
            if len(c) > 2:
                rot = list(range(self.g.n))
                for a, b in zip(c, c[1:] + c[:1]):
                    rot[a] = b
                gens.append(tuple(rot))
        return gens

    def lift_labeling(self, lab) -> list[int]:
        return [v for i in lab for v in self.classes[i]]


def _rows_of(g: Graph, lab) -> tuple[int, ...]:
    pos = [0] * g.n
    for i, v in enumerate(lab):
        pos[v] = i
    rows = []
    for v in lab:
        r = 0
        for u in bits(g.adj[v]):
            r |= 1 << pos[u]
        rows.append(r)
    return tuple(rows)


def _solve(g: Graph, colors, budget: int, want_canon: bool):
    tw = _Twins(g, colors)
    if tw.trivial:
        search = _Search(g, colors, budget)
        order, gens, base, orbits = search.group()
        canon = CanonicalForm(g.n, *search.canonical(gens)) if want_canon else None
        return order, gens, base, orbits, canon
    search = _Search(tw.quotient, tw.colors, budget)
    qorder, qgens, qbase, qorbits = search.group()
    order = qorder * math.prod(math.factorial(len(c)) for c in tw.classes)
    gens = tuple(tw.lift_perm(p) for p in qgens) + tuple(tw.internal_generators())
    base = tuple(tw.classes[i][0] for i in qbase) + tuple(v for c in tw.classes for v in c[1:])
    orbits = tuple(sorted(tuple(sorted(v for i in orb for v in tw.classes[i])) for orb in qorbits))
    canon = None
    if want_canon:
        _, qlab = search.canonical(qgens)
        lab = tw.lift_labeling(qlab)
        canon = CanonicalForm(g.n, _rows_of(g, lab), tuple(lab))
    return order, gens, base, orbits, canon


def automorphism_order(
    g: Graph,
    colors: Sequence | None = None,
    *,
    budget: int = DEFAULT_BUDGET,
    max_vertices: int = MAX_VERTICES,
    with_certificate: bool = True,
) -> AutResult:
    """Order of the automorphism group (colour-preserving if ``colors`` given)."""
    _check_size(g, max_vertices)
    if g.n == 0:
        return AutResult(1, (), (), (), CanonicalForm(0, (), ()).certificate)
    order, gens, base, orbits, canon = _solve(g, colors, budget, with_certificate)
    return AutResult(order, gens, base, orbits, canon.certificate if canon else None)


def canonical_form(
    g: Graph, colors: Sequence | None = None, *, budget: int = DEFAULT_BUDGET, max_vertices: int = MAX_VERTICES
) -> CanonicalForm:
    """A labelling-invariant form: isomorphic graphs give identical results."""
    _check_size(g, max_vertices)
    if g.n == 0:
        return CanonicalForm(0, (), ())
    return _solve(g, colors, budget, True)[4]


def is_isomorphic(g: Graph, h: Graph, **kwargs) -> bool:
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    a, b = canonical_form(g, **kwargs), canonical_form(h, **kwargs)
    return a.rows == b.rows
