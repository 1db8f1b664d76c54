"""Extended Shi arrangement combinatorics in type A.

n-cores and abacus diagrams, the core-to-alcove bijections, Shi tableaux
of dominant regions, separating walls and their bivariate generating
functions.
"""
from .abacus import BalancedVector, LevelVector, balanced_vector, core_from_level_vector, level_vector
from .affine import AffineWord, Point, minimal_word, phi_map, translation_decomposition
from .genfunc import BivariatePolynomial, WallQuery, base_theta, brute, recursion
from .partitions import Cell, NotACoreError, Partition, conjugate, first_hook, hook_length, is_core
from .shi import (
    AlcoveCoords,
    RegionTableau,
    ResourceCapExceeded,
    Root,
    enumerate_regions,
    is_separating_wall,
    psi,
    psi_inverse,
)

__version__ = "0.1.0"
