"""
Global Group Laws

Exact computations with global (equivariant) group laws: example laws,
Euler classes, regularity checks, flag expansions and completions,
geometric fixed points, strict coordinate changes and the truncated
Lazard ring.

Every operation below accepts `return_receipt=True` and then also
returns an OperationReceipt.
"""

from .version import __version__

from .exceptions import (
    CompositionError,
    DependentCharacters,
    DimensionMismatch,
    FamilyMismatch,
    GGLError,
    GroupSyntaxError,
    InvalidFGL,
    NotAUnit,
    NotARingMap,
    NotDivisible,
    NotStrict,
    PsiUnavailable,
    RingMismatch,
    UndecidablePresentation,
    ZeroCharacter,
)

from .kernel import CoefficientRing, LaurentPoly, TruncatedFGL, TruncatedSeries, parse_element
from .groups import (
    Character,
    GroupHom,
    GroupSpec,
    cyclic,
    elem2,
    graph,
    hom_from_rows,
    parse_character,
    parse_characters,
    parse_group,
    quotient,
    torus,
    trivial_group,
)
from .laws import GlobalLaw, LawElement, parse_law
from .regularity import RegularityReport, SplitDecomposition, SumRelation
from .completion import CompletedFGL, Flag, FlagExpansion, StrictIso, completion_series, default_flag, reassemble
from .fixed_points import CyclicFixedPoints, LocalizedElement, loc_is_zero
from .lazard import RelationSystem, Violation
from .helpers import ComputeOptions, OperationReceipt, OptionsError

from .calculus import (
    additive_law,
    arith,
    base_change,
    change_coordinate,
    char_pullback,
    check_euler_product,
    check_exact_sequence,
    check_exactness,
    check_k_regular,
    check_lift_independence,
    classify,
    completed_fgl,
    cyclic_fixed_points_mult,
    euler_class,
    exact_divide,
    fgl_sum,
    flag_expand,
    formal_inverse,
    from_fgl,
    gamma_coefficients,
    indecomposable_ranks,
    invert_series,
    kan_restrict,
    kan_value,
    kernel_subgroup,
    loc_eq,
    multiplicative_law,
    n_series,
    p2_leading_term_check,
    primitive_and_split,
    psi,
    psi_kernel_check,
    random_fgl,
    revert_series,
    series_compose,
    series_mul,
    smith_invariants,
    split_decompose,
    strict_iso,
    substitute,
    theta_eval,
    two_torsion_additive_law,
    two_torsion_sum_relation,
    unit_criterion,
    universal_relations,
    validate_fgl,
)
from .parallel import run_exactness_sweep, run_regularity_sweep
