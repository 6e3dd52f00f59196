"""
Global Group Laws: Euler Classes and Regularity

Euler classes, the defining exact sequences, k-regularity, split
decompositions and the ψ factorization.
"""

from ._reports import FAIL, PASS, RegularityReport, SplitDecomposition
from ._exactness import DEFAULT_BOUND, check_exact_sequence, check_k_regular, find_annihilator, split_decompose
from ._euler import (
    SumRelation,
    check_euler_product,
    euler_class,
    p2_leading_term_check,
    psi,
    psi_table,
    two_torsion_sum_relation,
)
