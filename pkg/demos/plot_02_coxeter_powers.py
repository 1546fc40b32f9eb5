"""
Lengths of Coxeter element powers
=================================

For an infinite Weyl group every power c^m of a Coxeter element has length
m*n.  In a finite group the lengths must eventually drop, since c has finite
order.
"""

from valquiver import catalog
from valquiver.cartan import cartan_matrix
from valquiver.weyl import coxeter_element, coxeter_power_lengths

for name in ["A2", "B2", "G2", "kronecker", "affine_A3"]:
    a = cartan_matrix(catalog.graph(name))
    perm = tuple(range(1, a.n + 1))
    lengths = coxeter_power_lengths(a, perm, 8)
    print(f"{name:10s} n={a.n}  l(c^m) = {lengths}")

# The element itself is an integer matrix acting on the root lattice.
a = cartan_matrix(catalog.graph("kronecker"))
c = coxeter_element(a, (1, 2))
for row in c.lines():
    print(row)
