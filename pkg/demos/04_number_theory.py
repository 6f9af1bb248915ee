# coding: utf-8

# # Divisor sums and two Robin-type inequalities
#
# sigma(q) counts maximal commuting sets of a q-dit.  Robin's inequality
# sigma(q) < e^gamma q log log q for all q > 5040 is equivalent to the Riemann
# hypothesis; here it is only checked on a finite range, with certified signs.

import numpy as np

from pauli_geometry import arith


# ## The last exception

for q in (2520, 5040, 5041, 10080):
    d = arith.robin_delta(q)
    print(q, d.sign, f"{float(d.value):+.6f}")


# ## Sweep
#
# Every q from 5041 up to 20000 gives a negative delta.

deltas = np.array([float(arith.robin_delta(q).value) for q in range(5041, 20001)])
print(deltas.max(), (deltas < 0).all())


# ## Primorials
#
# For the primorials N_k the Dedekind psi version
# psi(N_k) / (N_k log log N_k) - e^gamma / zeta(2) is claimed positive for
# k >= 31.  On this range it is in fact positive from k = 2 on.

signs = {k: arith.psi_primorial_delta(k).sign for k in range(2, 61)}
print([k for k, s in signs.items() if s != "positive"])
print(arith.primorial(10), arith.psi(arith.primorial(10)))
