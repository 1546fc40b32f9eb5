"""Valued quivers, (+)-admissible sequences and reduced words in Weyl groups."""
from .cartan import (
    CartanMatrix,
    Symmetrizer,
    ValuedGraph,
    cartan_matrix,
    is_finite_type,
    symmetrizer,
    validate_graph,
)
from .errors import QuiverError
from .fileformat import format_quiver, load_quiver, parse_quiver
from .preprojective import (
    PositivityTrace,
    PreprojectiveClass,
    annihilates,
    class_of,
    dim_of_sequence,
    enumerate_classes,
    preproj_leq,
    realizable,
    realizing_witness,
    shortest_annihilating,
)
from .quiver import (
    Orientation,
    filter_generated,
    hull,
    is_sink,
    orientation_from_coxeter_order,
    parse_orientation,
    reflect_orientation,
    tq_reachable,
)
from .sequences import (
    AdmissibleSequence,
    CanonicalForm,
    canonical_form,
    complete_sequence,
    is_equivalent,
    is_principal,
    is_subsequence,
    join,
    meet,
    multiplicity,
    principal_sequence,
    validate_admissible,
    word_of,
)
from .weyl import (
    WeylElement,
    coxeter_element,
    coxeter_power_lengths,
    element_of,
    is_reduced,
    length,
    reflect,
    word_length,
)

__version__ = "0.1.0"
