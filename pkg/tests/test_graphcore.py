import json
import math
import random
from itertools import combinations, permutations

import networkx as nx
import numpy as np
import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from pauli_geometry.graphcore import (
    Graph,
    SearchBudgetExceeded,
    automorphism_order,
    canonical_form,
    cocktail_party,
    complement,
    complete,
    complete_multipartite,
    connected_components,
    cycle,
    degree_histogram,
    dual_graph,
    empty,
    exact_rank,
    hypercube,
    intersection_graph,
    is_isomorphic,
    line_graph,
    maximal_cliques,
    named_graph,
    spectrum,
    srg_params,
)
from pauli_geometry.graphcore.automorphism import _Search
from pauli_geometry.pauli import build_pauli_graph


@st.composite
def graphs(draw, max_n=20, min_n=0):
    n = draw(st.integers(min_n, max_n))
    p = draw(st.sampled_from([0.15, 0.35, 0.5, 0.75, 0.9]))
    seed = draw(st.integers(0, 2**32 - 1))
    rng = random.Random(seed)
    return Graph.from_edges(n, [(i, j) for i, j in combinations(range(n), 2) if rng.random() < p])


def _to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def _exhaustive_maximal_cliques(g):
    cliques = [c for r in range(1, g.n + 1) for c in combinations(range(g.n), r) if g.is_clique(c)]
    sets = [set(c) for c in cliques]
    return sorted(c for c, s in zip(cliques, sets) if not any(s < t for t in sets))


def _check_spectrum(g):
    s = spectrum(g)
    assert sum(e.multiplicity for e in s.entries) == g.n
    if s.certified:
        assert sum(e.value * e.multiplicity for e in s.entries) == 0
        assert sum(e.value**2 * e.multiplicity for e in s.entries) == 2 * g.edge_count()
    else:
        assert abs(sum(e.value * e.multiplicity for e in s.entries)) < 1e-8 * max(g.n, 1)
        assert abs(sum(e.value**2 * e.multiplicity for e in s.entries) - 2 * g.edge_count()) < 1e-6 * max(g.n, 1)
    return s


# Graph basics


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph([0b10, 0])  # asymmetric
    with pytest.raises(ValueError):
        Graph([0b1])  # loop
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 0)])


def test_named_graphs():
    assert complete(6).edge_count() == 15
    octa = complete_multipartite([2, 2, 2])
    assert octa.edge_count() == 12 and set(octa.degrees()) == {4}
    cp = cocktail_party(15)
    assert cp.n == 30 and set(cp.degrees()) == {28}
    assert named_graph("hypercube", 3) == hypercube(3)
    assert is_isomorphic(named_graph("cocktail_party", 3), octa)
    with pytest.raises(ValueError):
        named_graph("petersen", 10)


def test_line_graph_and_complement():
    lk = line_graph(complete(4))
    assert lk.n == 6 and set(lk.degrees()) == {4}
    assert is_isomorphic(lk, cocktail_party(3))
    assert complement(complete(5)).edge_count() == 0


def test_json_roundtrip_and_dot():
    g = build_pauli_graph("2x2")
    data = json.loads(g.dumps())
    assert set(data) == {"n", "edges", "labels"} and data["n"] == 15 and len(data["edges"]) == 45
    assert Graph.from_json(g.dumps()) == g
    dot = g.to_dot()
    assert dot.startswith("graph G {") and dot.count(" -- ") == 45 and '"XZ"' in dot


@given(graphs())
@settings(max_examples=40, deadline=None)
def test_json_roundtrip_random(g):
    h = Graph.from_json(json.dumps(g.to_json()))
    assert h == g and list(h.labels) == list(g.labels)


def test_histogram_and_components():
    assert degree_histogram(hypercube(3)) == {3: 8}
    assert degree_histogram(empty(3)) == {0: 3}
    assert connected_components(cycle(5)) == [[0, 1, 2, 3, 4]]
    g = Graph.from_edges(5, [(3, 4)])
    assert [len(c) for c in connected_components(g)] == [2, 1, 1, 1]


# cliques


def test_clique_examples():
    fam = maximal_cliques(complete(4))
    assert fam.cliques == ((0, 1, 2, 3),)
    assert maximal_cliques(empty(3)).cliques == ((0,), (1,), (2,))
    fam.verify()


@given(graphs(max_n=14))
@settings(max_examples=60, deadline=None)
def test_cliques_match_exhaustive(g):
    fam = maximal_cliques(g)
    assert list(fam.cliques) == _exhaustive_maximal_cliques(g)
    fam.verify()


@given(graphs(max_n=20))
@settings(max_examples=60, deadline=None)
def test_cliques_match_networkx(g):
    oracle = sorted(tuple(sorted(c)) for c in nx.find_cliques(_to_nx(g))) if g.n else []
    assert list(maximal_cliques(g).cliques) == oracle


@given(graphs(max_n=16), st.integers(0, 4))
@settings(max_examples=40, deadline=None)
def test_intersection_graph_definition(g, k):
    fam = maximal_cliques(g)
    h = intersection_graph(fam, k)
    assert h.n == len(fam)
    for a, b in combinations(range(len(fam)), 2):
        assert h.has_edge(a, b) == (len(set(fam[a]) & set(fam[b])) == k)


def test_single_clique_family():
    fam = maximal_cliques(complete(3))
    for k in range(4):
        h = intersection_graph(fam, k)
        assert h.n == 1 and h.edge_count() == 0
    with pytest.raises(ValueError):
        intersection_graph(fam, -1)


def test_quartit_dual_components():
    h = dual_graph(maximal_cliques(build_pauli_graph("4")))
    assert [len(c) for c in connected_components(h)] == [6, 1]


# spectra


def test_spectrum_examples():
    assert spectrum(complete(4)).pairs() == [(3, 1), (-1, 3)]
    assert str(spectrum(cocktail_party(15))) == "{28^1, 0^15, -2^14}"
    assert str(spectrum(build_pauli_graph("2x2x2"))) == "{30^1, 3^35, -5^27}"
    assert str(spectrum(dual_graph(maximal_cliques(build_pauli_graph("4"))))) == "{4^1, 0^4, -2^2}"


def test_spectrum_uncertified_values():
    s = _check_spectrum(cycle(5))
    assert not s.certified
    assert s.entries[0].value == 2 and s.entries[0].certified
    golden = (1 + 5**0.5) / 2
    assert any(abs(e.value - (golden - 1)) < 1e-9 and e.multiplicity == 2 for e in s.entries)
    data = json.loads(s.dumps())
    assert data[0] == {"value": 2, "multiplicity": 1, "certified": True}


@given(graphs(max_n=24))
@settings(max_examples=60, deadline=None)
def test_spectrum_trace_identities(g):
    _check_spectrum(g)


@pytest.mark.parametrize(
    "g",
    [hypercube(4), cocktail_party(6), line_graph(complete(7)), build_pauli_graph("3x3"), build_pauli_graph("2x3")],
    ids=["Q4", "CP6", "T7", "pauli3x3", "pauli2x3"],
)
def test_spectrum_matches_numpy(g):
    s = _check_spectrum(g)
    ev = np.sort(np.linalg.eigvalsh(g.adjacency_matrix().astype(float)))[::-1]
    flat = [e.value for e in s.entries for _ in range(e.multiplicity)]
    assert np.allclose(ev, flat, atol=1e-8)


def test_exact_rank():
    assert exact_rank([[1, 2], [2, 4]]) == 1
    assert exact_rank([[0, 0], [0, 0]]) == 0
    assert exact_rank([[2, 1, 0], [1, 2, 1], [0, 1, 2]]) == 3


def test_srg_examples():
    assert srg_params(build_pauli_graph("2x2")) == (15, 6, 1, 3)
    assert srg_params(hypercube(3)) is None
    assert srg_params(complete(5)) is None
    assert srg_params(empty(5)) is None
    assert srg_params(cycle(5)) == (5, 2, 0, 1)


@given(graphs(max_n=16, min_n=2))
@settings(max_examples=40, deadline=None)
def test_srg_against_common_neighbour_oracle(g):
    degs = set(g.degrees())
    params = srg_params(g)
    if len(degs) != 1 or g.edge_count() in (0, g.n * (g.n - 1) // 2):
        assert params is None
        return
    lam = {len(set(g.neighbors(a)) & set(g.neighbors(b))) for a, b in g.edges()}
    mu = {
        len(set(g.neighbors(a)) & set(g.neighbors(b)))
        for a, b in combinations(range(g.n), 2)
        if not g.has_edge(a, b)
    }
    if len(lam) <= 1 and len(mu) == 1:
        assert params == (g.n, degs.pop(), lam.pop() if lam else 0, mu.pop())
    else:
        assert params is None


# automorphisms and canonical forms


@pytest.mark.parametrize(
    "g,order",
    [
        (build_pauli_graph("2x2"), 720),
        (hypercube(3), 48),
        (build_pauli_graph("2x2x2"), 1451520),
        (complete(7), math.factorial(7)),
        (empty(6), 720),
        (cycle(9), 18),
        (cocktail_party(5), 2**5 * math.factorial(5)),
        (line_graph(complete(6)), 720),
    ],
    ids=["pauli2x2", "cube", "pauli2x2x2", "K7", "E6", "C9", "CP5", "T6"],
)
def test_automorphism_orders(g, order):
    res = automorphism_order(g)
    assert res.order == order
    search = _Search(g, None, 10)
    assert all(search._is_automorphism(p) for p in res.generators)


def _brute_force_aut(g):
    edges = {frozenset(e) for e in g.edges()}
    return sum(
        1 for p in permutations(range(g.n)) if all(frozenset((p[a], p[b])) in edges for a, b in g.edges())
    )


@given(graphs(max_n=7))
@settings(max_examples=40, deadline=None)
def test_aut_order_brute_force(g):
    assert automorphism_order(g).order == _brute_force_aut(g)


@given(graphs(max_n=64, min_n=1), st.integers(0, 2**32 - 1))
@settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.too_slow])
def test_relabeling_invariance(g, seed):
    rng = random.Random(seed)
    base = automorphism_order(g)
    form = canonical_form(g)
    for _ in range(20):
        perm = list(range(g.n))
        rng.shuffle(perm)
        h = g.relabel(perm)
        assert canonical_form(h).rows == form.rows
        assert automorphism_order(h, with_certificate=False).order == base.order


@pytest.mark.parametrize(
    "g",
    [build_pauli_graph("2x2x2"), hypercube(6), build_pauli_graph("3x3"), build_pauli_graph("6"),
     line_graph(complete(8))],
    ids=["pauli2x2x2", "Q6", "pauli3x3", "pauli6", "T8"],
)
def test_relabeling_invariance_structured(g):
    rng = random.Random(7)
    form = canonical_form(g)
    order = automorphism_order(g).order
    for _ in range(20):
        perm = list(range(g.n))
        rng.shuffle(perm)
        h = g.relabel(perm)
        assert canonical_form(h).rows == form.rows
        assert automorphism_order(h, with_certificate=False).order == order


@given(graphs(max_n=40))
@settings(max_examples=40, deadline=None)
def test_aut_of_complement(g):
    assert automorphism_order(g).order == automorphism_order(complement(g)).order


@given(graphs(max_n=18, min_n=1), graphs(max_n=18, min_n=1))
@settings(max_examples=60, deadline=None)
def test_isomorphism_against_networkx(g, h):
    if g.n != h.n:
        h = g.relabel(list(reversed(range(g.n))))
    assert is_isomorphic(g, h) == nx.is_isomorphic(_to_nx(g), _to_nx(h))


@pytest.mark.parametrize(
    "g", [hypercube(4), cycle(11), cocktail_party(4), build_pauli_graph("2x2x2"), line_graph(complete(5))]
)
def test_vertex_transitive_order_divisible(g):
    res = automorphism_order(g)
    assert res.vertex_transitive
    assert res.order % g.n == 0


@given(graphs(max_n=30, min_n=1))
@settings(max_examples=40, deadline=None)
def test_orbits_divide_order(g):
    res = automorphism_order(g)
    for orbit in res.orbits:
        assert res.order % len(orbit) == 0
    if res.vertex_transitive:
        assert res.order % g.n == 0


def test_isomorphism_examples():
    assert is_isomorphic(build_pauli_graph([2, 3]), build_pauli_graph([6]))
    assert is_isomorphic(build_pauli_graph("2x2"), complement(line_graph(complete(6))))
    assert not is_isomorphic(build_pauli_graph("2x2"), line_graph(complete(6)))
    assert not is_isomorphic(cycle(4), complete(4))


def test_colored_automorphisms():
    g = cycle(6)
    assert automorphism_order(g, colors=[0, 1, 0, 1, 0, 1]).order == 6
    assert automorphism_order(g, colors=[1, 0, 0, 0, 0, 0]).order == 2


def test_budget_exhaustion():
    with pytest.raises(SearchBudgetExceeded):
        automorphism_order(build_pauli_graph("2x2x2"), budget=3)


def test_certificate_is_stable():
    a = automorphism_order(build_pauli_graph("2x2")).certificate
    b = canonical_form(complement(line_graph(complete(6)))).certificate
    assert a == b and len(a) == 64


def _blow_up(g, copies, adjacent):
    # replace vertex v by copies[v] twins, pairwise adjacent when adjacent[v]
    ids = [[len(sum((list(range(c)) for c in copies[:v]), [])) + i for i in range(copies[v])] for v in range(g.n)]
    n = sum(copies)
    edges = []
    for a, b in g.edges():
        edges += [(x, y) for x in ids[a] for y in ids[b]]
    for v in range(g.n):
        if adjacent[v]:
            edges += list(combinations(ids[v], 2))
    return Graph.from_edges(n, edges)


@given(graphs(max_n=6, min_n=1), st.data())
@settings(max_examples=40, deadline=None)
def test_twin_heavy_graphs(g, data):
    copies = [data.draw(st.integers(1, 3)) for _ in range(g.n)]
    adjacent = [data.draw(st.booleans()) for _ in range(g.n)]
    h = _blow_up(g, copies, adjacent)
    if h.n <= 8:
        assert automorphism_order(h).order == _brute_force_aut(h)
    res = automorphism_order(h)
    search = _Search(h, None, 10)
    assert all(search._is_automorphism(p) for p in res.generators)
    perm = list(range(h.n))
    random.Random(h.n).shuffle(perm)
    k = h.relabel(perm)
    assert canonical_form(k).rows == canonical_form(h).rows
    other = _blow_up(g, copies[::-1] if g.n > 1 else copies, adjacent)
    assert is_isomorphic(h, other) == nx.is_isomorphic(_to_nx(h), _to_nx(other))
