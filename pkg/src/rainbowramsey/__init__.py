"""Exact toolkit for rainbow Ramsey problems on the Boolean lattice.

Sets are bitmasks over a ground set [n] = {1, ..., n} (element i is bit
i-1), families are canonical sorted tuples of masks, and every mass or
count that feeds an identity check is exact (big integers / fractions).
"""

__version__ = "0.1.0"

from .lattice import Family, RegionSpec, region, max_partition
from .posets import PosetPattern, standard_poset, find_copy, structural_params, extremal_params
from .lubell import lubell_mass, lubell_subcube, maxpart_identity_residual
from .corechain import CoreChain, comparability, core_chain, validate_core_chain
from .colorings import Coloring, generate, find_pattern, validate_witness, thin_antichain
from .search import (
    SearchResult,
    ramsey,
    rainbow_ramsey,
    threshold_F,
    two_color_partial_exact,
    fork_g,
    fork_f_small,
)
from .asymptotics import binary_entropy, c_sequence, rainbow_antichain_bound, inequality_grid

__all__ = [
    "Family", "RegionSpec", "region", "max_partition",
    "PosetPattern", "standard_poset", "find_copy", "structural_params", "extremal_params",
    "lubell_mass", "lubell_subcube", "maxpart_identity_residual",
    "CoreChain", "comparability", "core_chain", "validate_core_chain",
    "Coloring", "generate", "find_pattern", "validate_witness", "thin_antichain",
    "SearchResult", "ramsey", "rainbow_ramsey", "threshold_F",
    "two_color_partial_exact", "fork_g", "fork_f_small",
    "binary_entropy", "c_sequence", "rainbow_antichain_bound", "inequality_grid",
]
