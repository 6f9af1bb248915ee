# coding: utf-8

# # Commutation of a single qudit
#
# A q-dit observable X^b Z^c is a point (b, c) of the lattice Z_q x Z_q.  Two
# observables commute when the symplectic product of their points vanishes
# mod q.  The maximal commuting sets are then the isotropic lines of the
# lattice, and there are sigma(q) of them.

import numpy as np

from pauli_geometry import arith
from pauli_geometry.graphcore import connected_components, degree_histogram, dual_graph, maximal_cliques, spectrum
from pauli_geometry.pauli import build_pauli_graph
from pauli_geometry.zline import isotropic_lines, projective_line


# ## The quartit
#
# Fifteen observables, seven maximal commuting sets of three.

g = build_pauli_graph("4")
cliques = maximal_cliques(g)
print(g, len(cliques))
for c in cliques.labels():
    print("  ", c)


# Each clique is an isotropic line of Z_4^2 with the origin removed.

for line in isotropic_lines(4):
    print(line.points)


# Six of the lines are free cyclic submodules, i.e. points of the projective
# line over Z_4.  The seventh, {(0,0),(0,2),(2,0),(2,2)}, is not cyclic.

pl = projective_line(4)
print(len(pl), "free submodules,", pl.admissible_count, "admissible vectors")


# The dual graph joins disjoint cliques.  The odd line out is isolated.

d = dual_graph(cliques)
print(degree_histogram(d), [len(c) for c in connected_components(d)])
print(spectrum(d))


# ## A table over q
#
# sigma(q) cliques and psi(q) free submodules; the two agree exactly when q
# is square-free.

rows = []
for q in range(2, 19):
    n_cliques = len(maximal_cliques(build_pauli_graph([q])))
    rows.append((q, n_cliques, arith.sigma(q), arith.psi(q)))
table = np.array(rows)
print(table)
assert (table[:, 1] == table[:, 2]).all()


# ## The 12-dit
#
# 28 cliques; the dual graph has four isolated cliques which all meet in the
# same three observables.

g12 = build_pauli_graph("12")
c12 = maximal_cliques(g12)
d12 = dual_graph(c12)
isolated = [v for v in range(d12.n) if d12.degree(v) == 0]
common = set.intersection(*(set(c12[v]) for v in isolated))
print(len(c12), degree_histogram(d12), sorted(g12.labels[v] for v in common))
