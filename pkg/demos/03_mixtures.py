# coding: utf-8

# # Mixed dimensions
#
# For a tensor product of factors q_1 x q_2 x ... the commutation phase is a
# product of roots of unity of different orders.  Coprime factors behave like
# a single factor of dimension q_1 q_2.

from pauli_geometry.graphcore import (
    automorphism_order,
    cocktail_party,
    connected_components,
    dual_graph,
    hypercube,
    intersection_graph,
    is_isomorphic,
    maximal_cliques,
    spectrum,
)
from pauli_geometry.pauli import build_pauli_graph


# ## Qubit and qutrit

print(is_isomorphic(build_pauli_graph("2x3"), build_pauli_graph("6")))


# ## Two qubits and a qutrit
#
# 60 maximal commuting sets of 11 observables.  Cliques meeting in 5
# observables form four doilies; cliques meeting in 2 form four triangular
# graphs.

g = build_pauli_graph("2x2x3")
cl = maximal_cliques(g)
print(len(cl), spectrum(dual_graph(cl)))
for k in (5, 2):
    h = intersection_graph(cl, k)
    comps = [h.induced_subgraph(c) for c in connected_components(h)]
    print(k, [c.n for c in comps], {str(spectrum(c)) for c in comps})


# The dual graph itself has 480 triangles and 720 tetrahedra as its maximal
# cliques.

print(maximal_cliques(dual_graph(cl)).sizes())


# ## Two quartits
#
# 151 cliques.  The 120 that are connected in the dual graph split into 15
# cubes when joined at 7 common observables.

g44 = build_pauli_graph("4x4")
c44 = maximal_cliques(g44)
d44 = dual_graph(c44)
big = connected_components(d44)[0]
cubes = intersection_graph(c44.subfamily(big), 7)
parts = [cubes.induced_subgraph(c) for c in connected_components(cubes)]
print(len(c44), len(big), len(parts), all(is_isomorphic(p, hypercube(3)) for p in parts))
print(automorphism_order(parts[0]).order)


# The other 31 cliques, joined at 3 common observables, give one isolated
# clique and the 15-cocktail party graph.

rest = [v for v in range(d44.n) if v not in set(big)]
h = intersection_graph(c44.subfamily(rest), 3)
comps = connected_components(h)
main = h.induced_subgraph(comps[0])
print([len(c) for c in comps], spectrum(main), is_isomorphic(main, cocktail_party(15)))
