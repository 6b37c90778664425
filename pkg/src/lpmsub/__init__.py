"""Lattice path matroid subdivisions: exact matroid, positroid and polyhedral tools."""

from .dissection import bcfw_lpm_collection, check_dissection, dissection_minors, noncrossing_pairs
from .dressian import enumerate_three_terms, is_positive_tropical_plucker, is_tropical_plucker
from .fan import build_lpmfan, dual_fan_check, enumerate_hypersimplex_splits, enumerate_lpm_splits
from .geometry import PointConfiguration, hull_facets, lower_facets, normalized_volume
from .lattice_paths import LatticePathMatroid, is_snake, lpm_bases, positroid_matrix, recognize_lpm
from .lp import LinearProgram, solve_lp
from .matroid import Matroid, contract, delete, dual, is_connected, is_series_parallel, uniform
from .positroid import (
    decorated_permutation_lpm,
    grassmann_necklace,
    is_cluster,
    is_positroid,
    weakly_separated,
)
from .subdivision import (
    Split,
    Subdivision,
    classify_cells,
    common_refinement,
    make_split,
    regular_subdivision,
    split_weight,
    splits_compatible,
    subdivisions_equal,
    weights_from_map,
    weights_from_vector,
)

__version__ = "0.1.0"
