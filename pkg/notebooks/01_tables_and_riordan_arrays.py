"""
Coordination tables as Riordan arrays
=====================================

The number of points at l1-distance ``n`` from the origin of ``Z^k`` fills
a square table ``S``; counting points *within* distance ``n`` gives the
Delannoy table ``D``. Both, and the companion table ``C``, are Riordan
arrays, so their algebra reduces to power-series algebra.
"""

from cubic_coordination import lattice, riordan
from cubic_coordination.cli import build_table, format_table

###############################################################################
# The three square tables, straight from the three-term recurrence.

for name in ("S", "D", "C"):
    print(name)
    print(format_table(name, build_table(name, 6, 6), "pretty"))

###############################################################################
# The same windows come out of ``R(g, f)`` with ``f = (1+x)/(1-x)``.

C = riordan.C_matrix(order=12)
print(C)
print(C.window(6) == riordan.lattice_square(2, 12).window(6))

###############################################################################
# Skewing a square table gives a proper Riordan array, which lives in the
# Riordan group: it has an inverse and A-/Z-sequences.

c_hat = riordan.c_triangle(order=12)
for row in c_hat.window(6).tolist():
    print(row)

inverse = c_hat.inverse()
print("first column of the inverse:", [inverse.entry(n, 0) for n in range(8)])
print("large Schroder numbers:     ", list(lattice.diagonal("Schroder", 7).values))

data = riordan.extract_production(c_hat)
print("A:", list(data.A.coeffs[:8]))
print("Z:", list(data.Z.coeffs[:8]))

###############################################################################
# The A/Z recurrence alone regrows the triangle.

print(riordan.replay_rows(data, 8) == c_hat.window(8))

###############################################################################
# Factorisations: left product and LDU.

left, right = riordan.left_product_decompose(C, 5)
print(left.shape, right.shape, left @ right == C.window(5))

L, D2, U = riordan.ldu_factors("C", 6)
print(L @ D2 @ U == C.window(6))
