"""Exact enumeration and classification of degeneracies in E = 3*n1^2 + n2^2."""

from .brahmagupta import (
    BrahmaguptaRep,
    Doublet,
    IdentityExpansion,
    RepClass,
    RepMode,
    classify_rep,
    doublet_from_rep,
    identity_expand,
    inverse_rep,
    inverse_rep_mixed_variant,
    rep_search,
    signed_doublet,
)
from .census import (
    CensusReport,
    CensusRow,
    DoubletCoverage,
    build_census,
    check_brahmagupta_conjecture,
    check_perrin_conjecture,
    doublet_coverage,
)
from .perrin import (
    InvalidSeedError,
    PerrinSeed,
    PerrinTriplet,
    match_perrin,
    perrin_energy,
    perrin_triplet,
)
from .spectrum import (
    EmptySpectrumError,
    EnergyLevel,
    Parity,
    Spectrum,
    State,
    energy_of,
    enumerate_spectrum,
    level_of,
    parity_of,
    parity_of_energy,
)

__version__ = "0.1.0"

__all__ = [
    "BrahmaguptaRep",
    "CensusReport",
    "CensusRow",
    "Doublet",
    "DoubletCoverage",
    "EmptySpectrumError",
    "EnergyLevel",
    "IdentityExpansion",
    "InvalidSeedError",
    "Parity",
    "PerrinSeed",
    "PerrinTriplet",
    "RepClass",
    "RepMode",
    "Spectrum",
    "State",
    "build_census",
    "check_brahmagupta_conjecture",
    "check_perrin_conjecture",
    "classify_rep",
    "doublet_coverage",
    "doublet_from_rep",
    "energy_of",
    "enumerate_spectrum",
    "identity_expand",
    "inverse_rep",
    "inverse_rep_mixed_variant",
    "level_of",
    "match_perrin",
    "parity_of",
    "parity_of_energy",
    "perrin_energy",
    "perrin_triplet",
    "rep_search",
    "signed_doublet",
]
