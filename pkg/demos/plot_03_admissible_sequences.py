"""
Admissible sequences and their lattice
======================================

A sequence of vertices is admissible when each letter is a sink after the
earlier letters have been reflected.  Up to commuting non-adjacent letters,
such a sequence is determined by how often each vertex occurs, so the
subsequence order becomes a lattice with pointwise min and max.
"""

from valquiver import catalog
from valquiver.oracles import enumerate_admissible, equivalence_closure
from valquiver.sequences import (
    canonical_form,
    is_equivalent,
    join,
    meet,
    multiplicity,
    validate_admissible,
)

o = catalog.quiver("A3_source2")
print("arrows:", o.arrows)
print("sinks:", o.sinks())

s = validate_admissible(o, [1, 3, 2, 1])
t = validate_admissible(o, [3, 1, 2, 3])
print("S =", s, " m_S =", multiplicity(s), " canonical:", canonical_form(s))
print("T =", t, " m_T =", multiplicity(t), " canonical:", canonical_form(t))
print("S ~ T ?", is_equivalent(s, t))
print("meet:", meet(s, t), "  join:", join(s, t))

# Brute force agrees: the commutation class of S is a handful of words.
print(sorted(equivalence_closure(o, s.letters)))

# Count admissible sequences by length.
counts = {}
for letters in enumerate_admissible(o, 6):
    counts[len(letters)] = counts.get(len(letters), 0) + 1
print(counts)
