import math
from itertools import combinations

import pytest

from pauli_geometry import arith
from pauli_geometry.graphcore import (
    automorphism_order,
    cocktail_party,
    complement,
    dual_graph,
    is_isomorphic,
    line_graph,
    maximal_cliques,
    spectrum,
)
from pauli_geometry.pauli import build_pauli_graph
from pauli_geometry.polar import (
    build_polar_space,
    find_spreads,
    generators,
    polar_pauli_crosscheck,
    puncture_clique,
    puncture_point,
)

CASES = [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1)]


def _gen_count(p, n):
    return math.prod(1 + p**i for i in range(1, n + 1))


@pytest.mark.parametrize("p,n", CASES)
def test_counts(p, n):
    space = build_polar_space(p, n)
    assert len(space.points) == arith.sigma(p ** (2 * n - 1)) == (p ** (2 * n) - 1) // (p - 1)
    gs = generators(space)
    assert len(gs) == _gen_count(p, n)
    assert list(gs.generators) == sorted(gs.generators)
    per_point = _gen_count(p, n - 1)
    for k, gen in enumerate(gs):
        assert gs.vector_count(k) == p**n - 1
        assert len(gen) == (p**n - 1) // (p - 1)
        assert all(space.collinear(a, b) for a, b in combinations(gen, 2))
    for pt in range(len(space.points)):
        assert len(gs.through(pt)) == per_point


@pytest.mark.parametrize("p,n", CASES)
def test_generators_are_maximal_subspaces(p, n):
    space = build_polar_space(p, n)
    for gen in generators(space):
        gen_set = set(gen)
        assert space.span(space.points[i] for i in gen) == frozenset(gen)
        outside = [x for x in range(len(space.points)) if x not in gen_set]
        assert not any(all(space.collinear(x, y) for y in gen) for x in outside)


@pytest.mark.parametrize("p,n", CASES)
def test_form_alternating_nondegenerate(p, n):
    space = build_polar_space(p, n)
    assert all(space.form(v, v) == 0 for v in space.points)
    perp = space.perp_masks
    full = (1 << len(space.points)) - 1
    assert all(m != full for m in perp)


def test_build_examples_and_errors():
    assert len(build_polar_space(2, 2).points) == 15
    assert len(build_polar_space(2, 3).points) == 63
    assert len(build_polar_space(3, 2).points) == 40
    with pytest.raises(ValueError):
        build_polar_space(4, 2)
    with pytest.raises(ValueError):
        build_polar_space(5, 3)
    with pytest.raises(ValueError):
        build_polar_space(2, 0)


@pytest.mark.parametrize("p,n,expected", [(2, 2, 6), (2, 1, 1), (3, 1, 1)])
def test_spreads_exhaustive(p, n, expected):
    space = build_polar_space(p, n)
    gs = generators(space)
    spreads = find_spreads(gs)
    assert len(spreads) == expected
    dual = dual_graph(maximal_cliques(build_pauli_graph([p] * n)))
    for s in spreads:
        assert len(s) == p**n + 1
        members = [set(gs.generators[k]) for k in s.members]
        assert all(not (a & b) for a, b in combinations(members, 2))
        assert set().union(*members) == set(range(len(space.points)))
        assert (p**n + 1) * (p**n - 1) == p ** (2 * n) - 1


def test_spreads_in_duals_are_cliques():
    # mutually unbiased proxy: a spread is a clique of the dual Pauli graph
    space = build_polar_space(2, 2)
    gs = generators(space)
    dual_pts = [frozenset(g) for g in gs]
    for s in find_spreads(gs):
        assert all(not (dual_pts[a] & dual_pts[b]) for a, b in combinations(s.members, 2))


def test_spread_limit():
    gs = generators(build_polar_space(3, 2))
    assert len(find_spreads(gs, limit=3)) == 3
    assert all(len(s) == 10 for s in find_spreads(gs, limit=3))


@pytest.mark.parametrize("p,n", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2)])
def test_crosscheck(p, n):
    assert polar_pauli_crosscheck(p, n)


def test_collinearity_graph_for_qubits():
    space = build_polar_space(2, 2)
    g = space.collinearity_graph()
    assert is_isomorphic(g, build_pauli_graph("2x2"))
    assert set(g.labels) == set(build_pauli_graph("2x2").labels)


@pytest.mark.parametrize("p,n", [(2, 2), (2, 3), (3, 2)])
def test_puncture_counts(p, n):
    g = build_pauli_graph([p] * n)
    fam = maximal_cliques(g)
    for u in (0, g.n // 2, g.n - 1):
        points, rest = puncture_point(g, fam, u)
        assert len(points) == g.n - 1 and u not in points
        assert len(rest) == _gen_count(p, n) - _gen_count(p, n - 1)
        assert all(u not in c for c in rest)
    assert arith.sigma(p ** (2 * n - 1)) - arith.sigma(p ** (2 * n - 3)) == arith.psi(p ** (2 * n - 1))


def test_puncture_examples():
    g = build_pauli_graph("2x2")
    _, rest = puncture_point(g, maximal_cliques(g), g.index("IX"))
    d = dual_graph(rest)
    assert len(rest) == 12
    assert str(spectrum(d)) == "{6^1, 2^3, 0^2, -2^6}"
    assert automorphism_order(d).order == 48

    g3 = build_pauli_graph("2x2x2")
    _, rest3 = puncture_point(g3, maximal_cliques(g3), 5)
    assert len(rest3) == 120
    assert str(spectrum(dual_graph(rest3))) == "{56^1, 4^70, -4^14, -8^35}"

    single = maximal_cliques(build_pauli_graph("2")).subfamily([0])
    _, empty_rest = puncture_point(build_pauli_graph("2"), single, single[0][0])
    assert len(empty_rest) == 0
    with pytest.raises(ValueError):
        puncture_point(g, maximal_cliques(g), 15)


def test_puncture_clique_examples():
    g = build_pauli_graph("2x2")
    fam = maximal_cliques(g)
    for clique in fam:
        h = puncture_clique(g, clique)
        assert h.n == 12 and set(h.degrees()) == {5}
        assert is_isomorphic(h, complement(line_graph(cocktail_party(3))))
    assert puncture_clique(g, []) == g
    with pytest.raises(ValueError):
        puncture_clique(g, [g.index("XI"), g.index("ZI")])
