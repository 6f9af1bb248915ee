# coding: utf-8

# # Qubits and symplectic polar spaces
#
# For n p-dits (p prime) the observables are the nonzero vectors of V(2n, p)
# and commutation is orthogonality for the symplectic form.  For qubits every
# projective point carries exactly one observable, so the Pauli graph is the
# collinearity graph of W(2n-1, 2).

from pauli_geometry.graphcore import (
    automorphism_order,
    complement,
    complete,
    dual_graph,
    intersection_graph,
    is_isomorphic,
    line_graph,
    maximal_cliques,
    spectrum,
    srg_params,
)
from pauli_geometry.pauli import build_pauli_graph
from pauli_geometry.polar import build_polar_space, find_spreads, generators, puncture_clique, puncture_point


# ## Two qubits: the doily

g = build_pauli_graph("2x2")
print(spectrum(g), srg_params(g), automorphism_order(g).order)
print(is_isomorphic(g, complement(line_graph(complete(6)))))


# The 15 generators of W(3, 2) are the 15 maximal commuting triples.  A spread
# picks 5 of them that partition the observables: a complete set of
# mutually unbiased bases.

space = build_polar_space(2, 2)
gs = generators(space)
spreads = find_spreads(gs)
print(len(gs), "generators,", len(spreads), "spreads")
for k in spreads[0].members:
    print("  ", [space.collinearity_graph().labels[i] for i in gs.generators[k]])


# Removing IX and the three triples through it leaves 12 triples.

_, rest = puncture_point(g, maximal_cliques(g), g.index("IX"))
d = dual_graph(rest)
print(len(rest), spectrum(d), automorphism_order(d).order)


# Removing a whole triple instead leaves a 5-regular graph on 12 vertices.

h = puncture_clique(g, maximal_cliques(g)[0])
print(h, sorted(set(h.degrees())))


# ## Three qubits

g3 = build_pauli_graph("2x2x2")
c3 = maximal_cliques(g3)
print(len(c3), c3.sizes(), spectrum(g3), automorphism_order(g3).order)
print(spectrum(dual_graph(c3)))
print(spectrum(intersection_graph(c3, 1)))


# ## Odd characteristic
#
# Over GF(3) a projective point carries p - 1 = 2 observables, so a generator
# of W(3, 3) with 4 points holds 8 commuting observables.

s3 = build_polar_space(3, 2)
gs3 = generators(s3)
print(len(s3.points), len(gs3), gs3.vector_count())
print(len(maximal_cliques(build_pauli_graph("3x3"))))
