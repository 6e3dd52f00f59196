"""
Global Group Laws: Geometric Fixed Points

Euler-denominator fractions, their equality tests, and the cyclic
splitting of the multiplicative law.
"""

from ._cyclic import (
    CyclicFixedPoints,
    composite_kills,
    cyclic_fixed_points_mult,
    fixed_point_image,
    psi_kernel_check,
    psi_kernel_mismatches,
)
from ._localized import LocalizedElement, loc_eq, loc_is_zero
