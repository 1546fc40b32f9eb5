"""
Finite or infinite Weyl group
=============================

A valued graph gives a Cartan matrix.  Its Weyl group is finite exactly when
the symmetrized matrix is positive definite, which we can read off the leading
principal minors.  Breadth first search over the Cayley graph confirms it.
"""

from valquiver import catalog
from valquiver.cartan import (
    cartan_matrix,
    is_finite_type,
    leading_minors,
    symmetrized,
    symmetrizer,
    validate_graph,
)
from valquiver.oracles import bfs_lengths

for name in ["A2", "B2", "G2", "A3", "kronecker", "indefinite3"]:
    g = catalog.graph(name)
    a = cartan_matrix(g)
    # minors of DA, all positive for a Dynkin graph
    minors = [str(m) for m in leading_minors(symmetrized(g))]
    table = bfs_lengths(a, cap=5000)
    print(f"{name:12s} d={symmetrizer(g).d}  minors={minors}  "
          f"finite={is_finite_type(g)}  bfs={table.status()}")

# The rank 2 picture: b12 * b21 < 4 is the finite region.
for b12, b21 in [(1, 1), (2, 1), (3, 1), (2, 2), (4, 1)]:
    g = validate_graph(2, [(1, 2, b12, b21)])
    print(b12, b21, is_finite_type(g))
