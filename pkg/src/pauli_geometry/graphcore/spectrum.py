"""Adjacency spectra with exact certification of integer eigenvalues."""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from math import gcd

import numpy as np

from .graph import Graph, bits

ROUND_TOL = 1e-6
CLUSTER_TOL = 1e-8


class SpectrumCertificationError(ArithmeticError):
    pass


@dataclass(frozen=True)
class Eigenvalue:
    value: int | float
    multiplicity: int
    certified: bool


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues with multiplicities, descending by value."""

    entries: tuple[Eigenvalue, ...]

    @property
    def certified(self) -> bool:
        return all(e.certified for e in self.entries)

    def as_dict(self) -> dict:
        return {e.value: e.multiplicity for e in self.entries}

    def pairs(self) -> list[tuple]:
        return [(e.value, e.multiplicity) for e in self.entries]

    def to_json(self) -> list[dict]:
        return [{"value": e.value, "multiplicity": e.multiplicity, "certified": e.certified} for e in self.entries]

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    def __str__(self) -> str:
        return "{" + ", ".join(f"{e.value}^{e.multiplicity}" for e in self.entries) + "}"


def exact_rank(rows: list[list[int]]) -> int:
    """Rank over Q of an integer matrix by fraction-free elimination.

    Rows are divided by their content after every update, which keeps the
    entries small for the 0/1-derived matrices seen here.
    """
    m = [list(r) for r in rows if any(r)]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot_row = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if pivot_row is None:
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        piv = m[rank]
        a = piv[col]
        for i in range(rank + 1, len(m)):
            row = m[i]
            b = row[col]
            if not b:
                continue
            g = gcd(a, b)
            fa, fb = a // g, b // g
            new = [fa * x - fb * y for x, y in zip(row, piv)]
            c = 0
            for x in new:
                if x:
                    c = gcd(c, x)
                    if c == 1:
                        break
            if c > 1:
                new = [x // c for x in new]
            m[i] = new
        rank += 1
        if rank == len(m):
            break
    return rank


def _nullity(g: Graph, lam: int) -> int:
    rows = []
    for i in range(g.n):
        row = [0] * g.n
        for j in bits(g.adj[i]):
            row[j] = 1
        row[i] = -lam
        rows.append(row)
    return g.n - exact_rank(rows)


def spectrum(g: Graph) -> Spectrum:
    """Adjacency spectrum; integer eigenvalues are certified exactly.

    Floating eigenvalues within ``ROUND_TOL`` of an integer are candidates;
    each candidate's multiplicity is the exact nullity of ``A - lam I``.
    Remaining eigenvalues are clustered at ``CLUSTER_TOL`` and flagged
    uncertified.
    """
    if g.n == 0:
        return Spectrum(())
    values = np.linalg.eigvalsh(g.adjacency_matrix(np.float64))
    rounded = np.rint(values)
    near = np.abs(values - rounded) < ROUND_TOL
    entries = []
    counted = 0
    for lam in sorted({int(x) for x in rounded[near]}, reverse=True):
        mult = _nullity(g, lam)
        float_mult = int(np.count_nonzero(near & (rounded == lam)))
        if mult != float_mult:
            raise SpectrumCertificationError(
                f"eigenvalue {lam}: exact multiplicity {mult} but {float_mult} floating eigenvalues nearby"
            )
        entries.append(Eigenvalue(lam, mult, True))
        counted += mult
    rest = np.sort(values[~near])[::-1]
    i = 0
    while i < len(rest):
        j = i + 1
        while j < len(rest) and rest[i] - rest[j] < CLUSTER_TOL * max(1.0, abs(rest[i])):
            j += 1
        entries.append(Eigenvalue(float(np.mean(rest[i:j])), j - i, False))
        counted += j - i
        i = j
    if counted != g.n:
        raise SpectrumCertificationError(f"multiplicities sum to {counted}, expected {g.n}")
    entries.sort(key=lambda e: -e.value)
    return Spectrum(tuple(entries))


def srg_params(g: Graph) -> tuple[int, int, int, int] | None:
    """``(v, k, lambda, mu)`` if ``g`` is strongly regular, else None.

    Complete and edgeless graphs are treated as degenerate and give None.
    """
    n = g.n
    if n < 2:
        return None
    degs = set(g.degrees())
    if len(degs) != 1:
        return None
    k = degs.pop()
    if k == 0 or k == n - 1:
        return None
    lam = mu = None
    for i, j in combinations(range(n), 2):
        common = (g.adj[i] & g.adj[j]).bit_count()
        if g.adj[i] >> j & 1:
            if lam is None:
                lam = common
            elif lam != common:
                return None
        else:
            if mu is None:
                mu = common
            elif mu != common:
                return None
    return n, k, lam, mu
