"""Machine-checkable claims about Pauli graphs and their geometries.

Every claim pairs a frozen expected value with a computation.
:func:`reproduce_paper` evaluates them all and returns a JSON-ready report.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cache
from itertools import combinations
from typing import Any, Callable

from . import arith
from .graphcore import (
    automorphism_order,
    cocktail_party,
    complement,
    complete,
    connected_components,
    degree_histogram,
    dual_graph,
    hypercube,
    intersection_graph,
    is_isomorphic,
    line_graph,
    maximal_cliques,
    spectrum,
    srg_params,
)
from .pauli import build_pauli_graph, enumerate_observables, parse_label
from .polar import (
    build_polar_space,
    find_spreads,
    generators,
    polar_pauli_crosscheck,
    puncture_clique,
    puncture_point,
)
from .zline import isotropic_lines

SCHEMA = 1
THREADS_ENV = "PAULI_GEOMETRY_THREADS"

QUARTIT_CLIQUES = [
    ["X^2", "Z^2", "Z^2X^2"],
    ["X", "X^2", "X^3"],
    ["X^2", "Z^2X", "Z^2X^3"],
    ["Z", "Z^2", "Z^3"],
    ["ZX", "Z^2X^2", "Z^3X^3"],
    ["ZX^2", "Z^2", "Z^3X^2"],
    ["ZX^3", "Z^2X^2", "Z^3X"],
]

TWO_QUBIT_CLIQUES = [
    ["IX", "XI", "XX"], ["IX", "YI", "YX"], ["IX", "ZI", "ZX"],
    ["IY", "XI", "XY"], ["IY", "YI", "YY"], ["IY", "ZI", "ZY"],
    ["IZ", "XI", "XZ"], ["IZ", "YI", "YZ"], ["IZ", "ZI", "ZZ"],
    ["XY", "YX", "ZZ"], ["XY", "YZ", "ZX"], ["XZ", "YX", "ZY"],
    ["XZ", "YY", "ZX"], ["XX", "YY", "ZZ"], ["XX", "YZ", "ZY"],
]


def worker_count() -> int:
    raw = os.environ.get(THREADS_ENV)
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            raise ValueError(f"{THREADS_ENV} must be a positive integer, got {raw!r}") from None
    return os.cpu_count() or 1


# shared, memoised constructions


@cache
def pauli(dims: str):
    return build_pauli_graph(dims)


@cache
def cliques(dims: str):
    return maximal_cliques(pauli(dims))


@cache
def dual(dims: str):
    return dual_graph(cliques(dims))


def spec_pairs(g) -> list[list]:
    return [[v, m] for v, m in spectrum(g).pairs()]


def _pairs(d: dict) -> list[list]:
    return [[k, v] for k, v in sorted(d.items(), key=lambda kv: -kv[0])]


def _hist(g) -> dict[str, int]:
    return {str(k): v for k, v in degree_histogram(g).items()}


def _label_sets(words: list[list[str]], dims: str) -> list[list[str]]:
    obs = enumerate_observables(dims)
    out = []
    for clique in words:
        out.append(sorted(obs.labels()[obs.vertex(parse_label(w, dims))] for w in clique))
    return sorted(out)


def _computed_label_sets(dims: str) -> list[list[str]]:
    return sorted(sorted(c) for c in cliques(dims).labels())


def _component_graphs(g):
    return [g.induced_subgraph(c) for c in connected_components(g)]


# criterion computations


def c1_table():
    return {str(q): [arith.sigma(q), arith.psi(q)] for q in (4, 8, 9, 12, 16, 18)}


def c2_robin_nonnegative():
    return [q for q in range(5041, 100001) if arith.robin_delta(q).sign != "negative"]


def c3_psicrit_nonpositive():
    return [k for k in range(31, 201) if arith.psi_primorial_delta(k).sign != "positive"]


def c4_bijection() -> bool:
    obs = enumerate_observables("4")
    from .pauli import Observable

    images = set()
    for line in isotropic_lines(4):
        images.add(tuple(sorted(obs.vertex(Observable(((b, c),))) for b, c in line.points if (b, c) != (0, 0))))
    return images == set(cliques("4").cliques)


def c4_component_aut() -> int:
    g = dual("4")
    comp = connected_components(g)[0]
    return automorphism_order(g.induced_subgraph(comp)).order


def c5_isolated_intersections() -> list[list[str]]:
    g = dual("12")
    fam = cliques("12")
    isolated = [v for v in range(g.n) if g.degree(v) == 0]
    masks = [set(fam[v]) for v in isolated]
    labels = pauli("12").labels
    inters = {tuple(sorted(labels[x] for x in a & b)) for a, b in combinations(masks, 2)}
    return sorted(list(t) for t in inters)


def c5_expected_intersections() -> list[list[str]]:
    obs = enumerate_observables("12")
    return [sorted(obs.labels()[obs.vertex(parse_label(w, "12"))] for w in ("X^6", "Z^6", "X^6Z^6"))]


def c5_component_aut() -> int:
    g = dual("12")
    return automorphism_order(g.induced_subgraph(connected_components(g)[0])).order


def c6_spreads() -> list[int]:
    found = find_spreads(generators(build_polar_space(2, 2)))
    return [len(found), sorted({len(s) for s in found})[0] if found else 0]


def _punctured_two_qubit():
    g = pauli("2x2")
    _, rest = puncture_point(g, cliques("2x2"), g.index("IX"))
    return rest


def c7_clique_variant() -> bool:
    g = pauli("2x2")
    h = puncture_clique(g, cliques("2x2")[0])
    return is_isomorphic(h, complement(line_graph(cocktail_party(3))))


def _punctured_three_qubit():
    g = pauli("2x2x2")
    _, rest = puncture_point(g, cliques("2x2x2"), 0)
    return rest


def c10_components(k: int, reference) -> dict:
    g = intersection_graph(cliques("2x2x3"), k)
    comps = _component_graphs(g)
    return {
        "sizes": [h.n for h in comps],
        "isomorphic": all(is_isomorphic(h, reference) for h in comps),
        "spectra": sorted({str(spectrum(h)) for h in comps}),
    }


def _two_quartit_parts():
    g = dual("4x4")
    comps = connected_components(g)
    big = comps[0]
    rest = [v for v in range(g.n) if v not in set(big)]
    return big, rest


def c11_cubes() -> dict:
    big, _ = _two_quartit_parts()
    g7 = intersection_graph(cliques("4x4").subfamily(big), 7)
    comps = _component_graphs(g7)
    return {
        "big_component": len(big),
        "count": len(comps),
        "all_cubes": all(is_isomorphic(h, hypercube(3)) for h in comps),
        "spectra": sorted({str(spectrum(h)) for h in comps}),
        "aut_orders": sorted({automorphism_order(h).order for h in comps}),
    }


def c11_rest() -> dict:
    _, rest = _two_quartit_parts()
    g3 = intersection_graph(cliques("4x4").subfamily(rest), 3)
    comps = _component_graphs(g3)
    main = comps[0]
    return {
        "remaining": len(rest),
        "component_sizes": [h.n for h in comps],
        "main_spectrum": spec_pairs(main),
        "cocktail_party": is_isomorphic(main, cocktail_party(15)),
    }


def c12_polar(p: int, n: int) -> dict:
    space = build_polar_space(p, n)
    gs = generators(space)
    return {
        "points": len(space.points),
        "generators": len(gs),
        "generator_vectors": sorted({gs.vector_count(k) for k in range(len(gs))}),
        "crosscheck": polar_pauli_crosscheck(p, n),
    }


@dataclass(frozen=True)
class Claim:
    id: str
    criterion: int
    description: str
    expected: Any
    compute: Callable[[], Any]


def _spec(d: dict) -> list[list]:
    return _pairs(d)


CLAIMS: list[Claim] = [
    Claim("arith.sigma_psi_table", 1, "sigma and psi of 4, 8, 9, 12, 16, 18",
          {"4": [7, 6], "8": [15, 12], "9": [13, 12], "12": [28, 24], "16": [31, 24], "18": [39, 36]}, c1_table),
    Claim("robin.negative_from_5041", 2, "Robin delta negative for 5041 <= q <= 100000", [], c2_robin_nonnegative),
    Claim("robin.positive_at_5040", 2, "Robin delta positive at q = 5040", "positive",
          lambda: arith.robin_delta(5040).sign),
    Claim("psicrit.positive_from_31", 3, "psi-primorial delta positive for 31 <= k <= 200", [], c3_psicrit_nonpositive),
    Claim("quartit.observables", 4, "quartit observables", 15, lambda: len(enumerate_observables("4"))),
    Claim("quartit.cliques", 4, "quartit maximal cliques as label sets",
          _label_sets(QUARTIT_CLIQUES, "4"), lambda: _computed_label_sets("4")),
    Claim("quartit.isotropic_bijection", 4, "isotropic lines of Z_4^2 map onto the maximal cliques", True, c4_bijection),
    Claim("quartit.dual_histogram", 4, "dual graph degree histogram", {"0": 1, "4": 6}, lambda: _hist(dual("4"))),
    Claim("quartit.dual_spectrum", 4, "dual graph spectrum", _spec({4: 1, 0: 4, -2: 2}), lambda: spec_pairs(dual("4"))),
    Claim("quartit.projective_line_aut", 4, "automorphism order of the 6-clique component", 48, c4_component_aut),
    Claim("dit12.observables", 5, "12-dit observables", 143, lambda: len(enumerate_observables("12"))),
    Claim("dit12.cliques", 5, "12-dit maximal cliques", 28, lambda: len(cliques("12"))),
    Claim("dit12.dual_histogram", 5, "dual graph degree histogram", {"0": 4, "12": 24}, lambda: _hist(dual("12"))),
    Claim("dit12.isolated_intersections", 5, "degree-0 cliques pairwise meet in {X^6, Z^6, X^6Z^6}",
          c5_expected_intersections(), c5_isolated_intersections),
    Claim("dit12.component_aut", 5, "automorphism order of the 24-clique component (2^12 * 144)", 589824,
          c5_component_aut),
    Claim("two_qubit.cliques", 6, "two-qubit maximal cliques as label sets",
          _label_sets(TWO_QUBIT_CLIQUES, "2x2"), lambda: _computed_label_sets("2x2")),
    Claim("two_qubit.spectrum", 6, "Pauli graph spectrum", _spec({6: 1, 1: 9, -3: 5}), lambda: spec_pairs(pauli("2x2"))),
    Claim("two_qubit.srg", 6, "strongly regular parameters", [15, 6, 1, 3], lambda: list(srg_params(pauli("2x2")))),
    Claim("two_qubit.aut", 6, "automorphism order |S_6|", 720, lambda: automorphism_order(pauli("2x2")).order),
    Claim("two_qubit.complement_line_graph_K6", 6, "isomorphic to complement(L(K_6))", True,
          lambda: is_isomorphic(pauli("2x2"), complement(line_graph(complete(6))))),
    Claim("two_qubit.spreads", 6, "spread count and spread size", [6, 5], c6_spreads),
    Claim("punctured_two_qubit.cliques", 7, "cliques left after removing IX", 12, lambda: len(_punctured_two_qubit())),
    Claim("punctured_two_qubit.dual_spectrum", 7, "punctured dual spectrum", _spec({6: 1, 2: 3, 0: 2, -2: 6}),
          lambda: spec_pairs(dual_graph(_punctured_two_qubit()))),
    Claim("punctured_two_qubit.aut", 7, "punctured dual automorphism order", 48,
          lambda: automorphism_order(dual_graph(_punctured_two_qubit())).order),
    Claim("punctured_two_qubit.clique_variant", 7, "clique-punctured graph is complement(L(K_222))", True,
          c7_clique_variant),
    Claim("three_qubit.observables", 8, "three-qubit observables", 63, lambda: pauli("2x2x2").n),
    Claim("three_qubit.cliques", 8, "maximal cliques by size", {"7": 135},
          lambda: {str(k): v for k, v in cliques("2x2x2").sizes().items()}),
    Claim("three_qubit.spectrum", 8, "Pauli graph spectrum", _spec({30: 1, 3: 35, -5: 27}),
          lambda: spec_pairs(pauli("2x2x2"))),
    Claim("three_qubit.aut", 8, "automorphism order |Sp(6,2)|", 1451520,
          lambda: automorphism_order(pauli("2x2x2")).order),
    Claim("three_qubit.dual_spectrum", 8, "dual graph spectrum", _spec({64: 1, 4: 84, -8: 50}),
          lambda: spec_pairs(dual("2x2x2"))),
    Claim("three_qubit.one_point_spectrum", 8, "1-point intersection graph spectrum",
          _spec({56: 1, 14: 15, 2: 35, -4: 84}), lambda: spec_pairs(intersection_graph(cliques("2x2x2"), 1))),
    Claim("three_qubit.punctured_dual_spectrum", 8, "punctured dual spectrum (120 cliques)",
          _spec({56: 1, 4: 70, -4: 14, -8: 35}), lambda: spec_pairs(dual_graph(_punctured_three_qubit()))),
    Claim("three_qubit.punctured_dual_aut", 8, "punctured dual automorphism order (2^6 * |A_8|)", 1290240,
          lambda: automorphism_order(dual_graph(_punctured_three_qubit())).order),
    Claim("mixture.two_by_three_is_six", 9, "Pauli(2x3) isomorphic to Pauli(6)", True,
          lambda: is_isomorphic(pauli("2x3"), pauli("6"))),
    Claim("mixture.clique_counts", 9, "maximal cliques of Pauli(2x3) and Pauli(6)", [12, 12],
          lambda: [len(cliques("2x3")), len(cliques("6"))]),
    Claim("qubit_qutrit.observables", 10, "two-qubit/qutrit observables", 143, lambda: pauli("2x2x3").n),
    Claim("qubit_qutrit.cliques", 10, "maximal cliques", 60, lambda: len(cliques("2x2x3"))),
    Claim("qubit_qutrit.dual_spectrum", 10, "dual graph spectrum",
          _spec({24: 1, 6: 5, 2: 27, -2: 15, -6: 9, -8: 3}), lambda: spec_pairs(dual("2x2x3"))),
    Claim("qubit_qutrit.five_point_doilies", 10, "k=5 graph is four copies of the doily",
          {"sizes": [15] * 4, "isomorphic": True, "spectra": ["{6^1, 1^9, -3^5}"]},
          lambda: c10_components(5, pauli("2x2"))),
    Claim("qubit_qutrit.two_point_triangular", 10, "k=2 graph is four copies of L(K_6)",
          {"sizes": [15] * 4, "isomorphic": True, "spectra": ["{8^1, 2^5, -2^9}"]},
          lambda: c10_components(2, line_graph(complete(6)))),
    Claim("qubit_qutrit.dual_cliques", 10, "maximal cliques of the dual graph by size", {"3": 480, "4": 720},
          lambda: {str(k): v for k, v in maximal_cliques(dual("2x2x3")).sizes().items()}),
    Claim("two_quartit.observables", 11, "two-quartit observables", 255, lambda: pauli("4x4").n),
    Claim("two_quartit.cliques", 11, "maximal cliques", 151, lambda: len(cliques("4x4"))),
    Claim("two_quartit.seven_point_cubes", 11, "k=7 graph of the 120-clique part is 15 cubes",
          {"big_component": 120, "count": 15, "all_cubes": True, "spectra": ["{3^1, 1^3, -1^3, -3^1}"],
           "aut_orders": [48]}, c11_cubes),
    Claim("two_quartit.remaining_cocktail_party", 11, "k=3 graph of the other 31 cliques",
          {"remaining": 31, "component_sizes": [30, 1], "main_spectrum": _spec({28: 1, 0: 15, -2: 14}),
           "cocktail_party": True}, c11_rest),
    Claim("polar.W3_2", 12, "W(3,2): points, generators, generator size, Pauli bridge",
          {"points": 15, "generators": 15, "generator_vectors": [3], "crosscheck": True}, lambda: c12_polar(2, 2)),
    Claim("polar.W5_2", 12, "W(5,2): points, generators, generator size, Pauli bridge",
          {"points": 63, "generators": 135, "generator_vectors": [7], "crosscheck": True}, lambda: c12_polar(2, 3)),
    Claim("polar.W3_3", 12, "W(3,3): points, generators, generator size, Pauli bridge",
          {"points": 40, "generators": 40, "generator_vectors": [8], "crosscheck": True}, lambda: c12_polar(3, 2)),
]


def _evaluate(claim: Claim, expected: Any) -> dict:
    try:
        computed = claim.compute()
        error = None
    except Exception as exc:  # a crashing claim is a failed claim
        computed, error = None, f"{type(exc).__name__}: {exc}"
    entry = {
        "id": claim.id,
        "criterion": claim.criterion,
        "description": claim.description,
        "expected": expected,
        "computed": computed,
        "passed": error is None and computed == expected,
    }
    if error:
        entry["error"] = error
    return entry


def _evaluate_by_id(args: tuple[str, Any]) -> dict:
    cid, expected = args
    claim = next(c for c in CLAIMS if c.id == cid)
    return _evaluate(claim, expected)


def reproduce_paper(
    overrides: dict[str, Any] | None = None, workers: int | None = None, ids=None
) -> dict:
    """Evaluate every claim (or only ``ids``); ``overrides`` replaces expected values by claim id."""
    overrides = overrides or {}
    known = {c.id for c in CLAIMS}
    unknown = (set(overrides) | set(ids or ())) - known
    if unknown:
        raise ValueError(f"unknown claim ids: {sorted(unknown)}")
    selected = [c for c in CLAIMS if ids is None or c.id in set(ids)]
    jobs = [(c.id, overrides.get(c.id, c.expected)) for c in selected]
    workers = worker_count() if workers is None else workers
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_evaluate_by_id, jobs))
    else:
        results = [_evaluate_by_id(job) for job in jobs]
    return {
        "schema": SCHEMA,
        "command": "reproduce",
        "claims": results,
        "passed": sum(r["passed"] for r in results),
        "failed": sum(not r["passed"] for r in results),
    }
