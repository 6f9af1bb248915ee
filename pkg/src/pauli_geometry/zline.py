"""Geometry of the module Z_q^2.

Symplectic products, isotropic lines (Lagrangian submodules, origin
included), free cyclic submodules and the projective line P1(Z_q).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

Point = tuple[int, int]


@dataclass(frozen=True, order=True)
class Vec2Zq:
    q: int
    b: int
    c: int

    def __post_init__(self):
        if self.q < 2:
            raise ValueError("modulus must be at least 2")
        if not (0 <= self.b < self.q and 0 <= self.c < self.q):
            raise ValueError(f"({self.b}, {self.c}) is not reduced mod {self.q}")

    @classmethod
    def of(cls, q: int, b: int, c: int) -> "Vec2Zq":
        return cls(q, b % q, c % q)

    @property
    def pair(self) -> Point:
        return (self.b, self.c)


@dataclass(frozen=True, order=True)
class IsotropicLine:
    q: int
    points: tuple[Point, ...]  # sorted, includes (0, 0)

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, p) -> bool:
        return tuple(p) in self.points


@dataclass(frozen=True, order=True)
class CyclicSubmodule:
    generator: Vec2Zq
    points: tuple[Point, ...]
    admissible: bool

    @property
    def q(self) -> int:
        return self.generator.q


@dataclass(frozen=True)
class ProjectiveLine:
    """The free cyclic submodules of Z_q^2, each listed once."""

    q: int
    submodules: tuple[CyclicSubmodule, ...]
    admissible_count: int

    def __len__(self) -> int:
        return len(self.submodules)

    def __iter__(self):
        return iter(self.submodules)


def symplectic_product(u: Vec2Zq, v: Vec2Zq) -> int:
    """u.b * v.c - v.b * u.c reduced mod q."""
    if u.q != v.q:
        raise ValueError(f"modulus mismatch: {u.q} vs {v.q}")
    return (u.b * v.c - v.b * u.c) % u.q


def _orbit(q: int, b: int, c: int) -> tuple[Point, ...]:
    return tuple(sorted({(u * b % q, u * c % q) for u in range(q)}))


def cyclic_submodule(g: Vec2Zq) -> CyclicSubmodule:
    """Z_q g = {(ub, uc) : u in Z_q}; admissible iff u -> ug is injective."""
    pts = _orbit(g.q, g.b, g.c)
    return CyclicSubmodule(g, pts, len(pts) == g.q)


@lru_cache(maxsize=64)
def _all_cyclic(q: int) -> dict[tuple[Point, ...], Point]:
    """Distinct cyclic submodules mapped to their smallest generator."""
    seen: dict[tuple[Point, ...], Point] = {}
    for b, c in product(range(q), repeat=2):
        pts = _orbit(q, b, c)
        if pts not in seen:
            seen[pts] = (b, c)
    return seen


@lru_cache(maxsize=64)
def _isotropic_lines(q: int) -> tuple[IsotropicLine, ...]:
    # Every submodule of Z_q^2 is generated by at most two elements, so every
    # Lagrangian submodule is a sum C1 + C2 of cyclic submodules with
    # perpendicular generators; keep the sums of size q.
    cyclic = sorted(_all_cyclic(q).items(), key=lambda kv: (len(kv[0]), kv[0]))
    found: set[tuple[Point, ...]] = set()
    for i, (pts1, (b1, c1)) in enumerate(cyclic):
        if q % len(pts1):
            continue
        if len(pts1) == q:
            found.add(pts1)
            continue
        set1 = set(pts1)
        for pts2, (b2, c2) in cyclic[i + 1 :]:
            if (b1 * c2 - b2 * c1) % q:
                continue
            common = len(set1.intersection(pts2))
            if len(pts1) * len(pts2) != q * common:
                continue
            total = tuple(sorted({((x1 + x2) % q, (y1 + y2) % q) for x1, y1 in pts1 for x2, y2 in pts2}))
            found.add(total)
    return tuple(IsotropicLine(q, pts) for pts in sorted(found))


def isotropic_lines(q: int) -> list[IsotropicLine]:
    """All isotropic lines of Z_q^2 in canonical order; there are sigma(q) of them."""
    if q < 2:
        raise ValueError("modulus must be at least 2")
    return list(_isotropic_lines(q))


def projective_line(q: int) -> ProjectiveLine:
    """Free cyclic submodules of Z_q^2 (psi(q) of them) and the admissible-vector count (J_2(q))."""
    if q < 2:
        raise ValueError("modulus must be at least 2")
    subs: dict[tuple[Point, ...], CyclicSubmodule] = {}
    admissible = 0
    for b, c in product(range(q), repeat=2):
        sub = cyclic_submodule(Vec2Zq(q, b, c))
        if not sub.admissible:
            continue
        admissible += 1
        subs.setdefault(sub.points, sub)
    ordered = tuple(subs[k] for k in sorted(subs))
    return ProjectiveLine(q, ordered, admissible)


def is_isotropic(q: int, points) -> bool:
    pts = list(points)
    return all((b1 * c2 - b2 * c1) % q == 0 for b1, c1 in pts for b2, c2 in pts)
