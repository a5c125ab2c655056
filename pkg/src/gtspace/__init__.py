"""Finite generalized topological spaces (Chu spaces over [0, 1]) with exact degrees."""

from .connectives import (
    limp,
    product,
    sum,
    tensor,
    tensor_sum,
    unit_top,
    unit_zero,
    verify_identities,
)
from .core import (
    OpenFamily,
    SetRef,
    Space,
    SubspaceWitness,
    as_degree,
    degree,
    find_subspace_witness,
    intersection_witness,
    is_subset,
    new_space,
    sets_equal,
    union_witness,
)
from .duality import ClosedLink, closed_of, closed_subspace_check, dual, verify_scgts
from .errors import GTSError
from .interp import (
    ClassicalTopology,
    FuzzySet,
    Subbase,
    export_classical,
    from_classical,
    from_fuzzy,
    pointwise_subbase,
    tensor_subbase,
)
from .morphisms import (
    ContinuousMap,
    check_continuous,
    enumerate_continuous,
    find_isomorphism,
    induced_closed_map,
)
from .properties import (
    TWO,
    PropertyReport,
    check_compact,
    check_connected,
    check_cover,
    check_hausdorff,
    check_preserved_under_iso,
    check_regular,
    check_sgts,
    minimal_positive_subcover,
)
from .textio import parse_space, relabel, serialize_space

__version__ = "0.1.0"
