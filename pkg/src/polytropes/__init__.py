"""Exact volumes of polytropes from their Kleene star matrix."""

from .errors import PolytropeError
from .polytrope import HalfSpace, Polytrope, contains, hrep, is_degenerate, tropical_segment
from .pseudovertex import (
    Pseudovertex,
    active_facets,
    enumerate_pseudovertices,
    is_maximal,
    is_simple,
    multi_indices,
    tropical_cramer,
)
from .trop_core import INF, HomogeneousPoint, TropicalMatrix, kleene_star, tdet_min
from .volume import Objective, ObjectivePolicy, VolumeReport, compute_volume, volume

__version__ = "0.1.0"
