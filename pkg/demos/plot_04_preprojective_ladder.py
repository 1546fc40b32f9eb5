"""
Preprojective classes and principal sequences
=============================================

Each indecomposable preprojective is labelled by a pair (r, x) and has a
shortest annihilating sequence S_{r,x}.  Reflecting e_{x_s} backwards along
that sequence produces its dimension vector.  On the Kronecker quiver this
gives the familiar ladder (0,1), (1,2), (2,3), ...
"""

from valquiver import catalog
from valquiver.cartan import cartan_matrix
from valquiver.preprojective import dim_of_sequence, enumerate_classes, realizing_witness
from valquiver.sequences import principal_sequence, validate_admissible
from valquiver.weyl import is_reduced

k = catalog.quiver("kronecker")
for c in enumerate_classes(k, 4):
    print(c, "   S =", c.sequence)

# On a Dynkin quiver the component is finite: A3 has six classes.
a3 = catalog.quiver("A3")
classes = enumerate_classes(a3, 6)
print(len(classes), "classes on A3:", [str(c) for c in classes])

# Past the end of the component the trace vanishes.
trace = dim_of_sequence(cartan_matrix(a3.graph), principal_sequence(a3, 2, 1))
for pos, letter, v in trace.steps():
    print(pos, letter, v)
print("zero at position", trace.zero_at)

# A sequence is the shortest sequence of some module iff its word is reduced.
s = validate_admissible(k, [2, 1, 2])
print(s, "reduced:", is_reduced(cartan_matrix(k.graph), s.letters),
      "witness:", realizing_witness(s))
