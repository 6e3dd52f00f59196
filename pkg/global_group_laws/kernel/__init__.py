"""
Global Group Laws: Algebra Kernel

Exact coefficient rings, sparse Laurent polynomials, truncated power series
and the integer/field linear algebra everything else is built on.
"""

from ._rings import CoefficientRing, RingKind, ring_map
from ._laurent import LaurentPoly, poly_ring
from ._series import TruncatedSeries, series_names
from ._parse import parse_element
from ._fgl import TruncatedFGL, associativity_residual, commutativity_defects, unit_defects
from ._linalg import (
    field_nullspace,
    field_rank,
    field_rref,
    field_solve,
    hermite_rows,
    in_lattice,
    integer_solve,
    reduce_by_hermite,
    smith_diagonal,
    smith_with_transforms,
    unimodular_inverse,
)
