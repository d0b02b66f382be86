"""Connectivity structures of finite families of random variables.

Every finite integral connectivity structure is the structure of some family
of random variables; this package computes both directions exactly.
"""

from .constructions import brunnian_family, discrete_family, realize, universe_size, wedge
from .errors import (
    BrunnianError,
    EmptySubset,
    GroundMismatch,
    LengthMismatch,
    NegativeProbability,
    NotClosed,
    NotGlobal,
    NotOverlapping,
    OutOfRange,
    ParseError,
    ProbSumNotOne,
    TooLarge,
    TooSmall,
)
from .family import (
    JointDistribution,
    RandomFamily,
    check_component_independence,
    connectivity_structure,
    family_respects,
    joint_distribution,
    restrict_family,
    tensor,
    validate_family,
)
from .formats import format_cnct, format_fam, parse_cnct, parse_fam
from .oracle import (
    StructureCatalog,
    enumerate_structures,
    oracle_connectivity_structure,
    verify_roundtrip,
)
from .search import SearchBudget, minimize_family, search_minimal
from .structure import (
    ConnectivityStructure,
    adapted_dissociations,
    connected_components,
    discrete,
    gamma,
    generate,
    gross,
    intersection,
    irreducibles,
    is_adapted,
    restrict,
    structure_sum,
    validate_structure,
)
from .subsets import (
    Dissociation,
    contests,
    enumerate_dissociations,
    family_contests,
    restrict_dissociation,
    subset,
)

__version__ = "0.1.0"
