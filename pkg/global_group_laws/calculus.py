"""
Global Group Laws: Operations

The user-facing calculus of global group laws. Every function here is a
thin, timed entry point over the subpackages:

Key Features
------------
- **Algebra kernel**: exact Laurent polynomial and truncated series
  arithmetic over Z, Q and F_p.
- **Groups**: character pullback, primitive/split decomposition, kernel
  subgroups.
- **Laws**: multiplicative, additive, 2-torsion additive and complete
  laws, base change, the Kan extension to quotient presentations.
- **Euler classes and regularity**: exact sequences, k-regularity,
  split decompositions, the ψ factorization.
- **Completion**: flag expansions, augmentations, the completed formal
  group law, n-series, strict coordinate changes.
- **Fixed points**: fractions with Euler-class denominators, cyclic
  fixed points of the multiplicative law.
- **Lazard desk**: universal relations, validation and classification of
  truncated formal group laws.

Usage
-----
Every operation accepts `return_receipt=True`, in which case it returns
`(result, OperationReceipt)`. Numeric defaults (depth, bound, degree,
truncation, jobs) come from `ComputeOptions`, so the GGL_* environment
variables apply when an argument is omitted.

>>> from global_group_laws import multiplicative_law, psi, CoefficientRing
>>> str(psi(multiplicative_law(CoefficientRing.integers()), 6))
't^2 - t + 1'
"""

# Standard library imports
import inspect
import logging
import time
from functools import wraps
from typing import Callable, List, Optional, Sequence, Union

# Local application/library specific imports
from . import completion as _completion
from . import fixed_points as _fixed_points
from . import groups as _groups
from . import laws as _laws
from . import lazard as _lazard
from . import regularity as _regularity
from .exceptions import RingMismatch
from .groups import Character, GroupHom, GroupSpec
from .helpers import ComputeOptions, OperationReceipt, TaskType, determine_task_type, summarize_input
from .kernel import CoefficientRing, LaurentPoly, TruncatedFGL, TruncatedSeries
from .laws import GlobalLaw, LawElement
from .parallel import run_exactness_sweep, run_regularity_sweep

logger = logging.getLogger(__name__)


def _single_exactness(law, group, chars, bound, jobs):
    return _regularity.check_exact_sequence(law, group, chars, bound)


def _multi_exactness(law, group, chars, bound, jobs):
    return run_exactness_sweep(law, group, list(chars), bound, jobs)


def _multi_regularity(law, group, chars, bound, jobs):
    return run_regularity_sweep(law, list(chars), bound, jobs, group)


# Route exactness requests by the shape of the character input
_TASK_MAP = {
    TaskType.SINGLE: _single_exactness,
    TaskType.MULTI_CHAR: _multi_exactness,
    TaskType.MULTI_TUPLE: _multi_regularity,
}


def _timed_operation(func: Callable) -> Callable:
    """
    Decorator timing an operation and optionally returning a receipt.

    The wrapped function takes an extra keyword `return_receipt`; when it
    is true the result comes back as `(result, OperationReceipt)`.
    """
    signature = inspect.signature(func)

    @wraps(func)
    def wrapper(*args, return_receipt: bool = False, **kwargs):
        start_time = time.time()
        result = func(*args, **kwargs)
        duration = time.time() - start_time
        logger.debug(f"calculus:{func.__name__}:finished in {duration:.4f}s")
        if return_receipt:
            arguments = signature.bind_partial(*args, **kwargs).arguments
            receipt = OperationReceipt(func.__name__, {k: summarize_input(v) for k, v in arguments.items()}, duration)
            return result, receipt
        return result

    return wrapper


# region Algebra kernel
@_timed_operation
def arith(a: LaurentPoly, b: LaurentPoly, op: str) -> LaurentPoly:
    """
    Add, subtract or multiply two Laurent polynomials.

    Parameters
    ----------
    a, b : LaurentPoly
        Operands over the same ring and variable count.
    op : str
        'add', 'sub' or 'mul'.

    Returns
    -------
    LaurentPoly

    Raises
    ------
    RingMismatch
        When the operands differ in ring or variable count.
    ValueError
        For an unknown op.
    """
    if op == 'add':
        return a + b
    if op == 'sub':
        return a - b
    if op == 'mul':
        return a * b
    raise ValueError(f"calculus:arith:unknown op '{op}' (expected add, sub or mul)")


@_timed_operation
def substitute(p: LaurentPoly, images: Sequence[Sequence[int]], target_nvars: int) -> LaurentPoly:
    """
    Replace variable i by the Laurent monomial with exponent vector images[i].

    Parameters
    ----------
    p : LaurentPoly
    images : sequence of sequence of int
        One exponent vector of length `target_nvars` per variable of p.
    target_nvars : int

    Returns
    -------
    LaurentPoly
        A polynomial in `target_nvars` variables.

    Raises
    ------
    DimensionMismatch
        When the number or length of the images is wrong.
    """
    return p.substitute(images, target_nvars)


@_timed_operation
def exact_divide(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """
    The exact quotient num / den.

    Raises
    ------
    NotDivisible
        When den does not divide num.
    """
    return num.exact_divide(den)


@_timed_operation
def series_mul(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    return f * g


@_timed_operation
def series_compose(f: TruncatedSeries, args: Sequence[TruncatedSeries]) -> TruncatedSeries:
    """
    Substitute args[i] for variable i of f.

    Parameters
    ----------
    f : TruncatedSeries
    args : sequence of TruncatedSeries
        One series per variable of f, each without constant term.

    Returns
    -------
    TruncatedSeries
        Truncated at the bound of the arguments.

    Raises
    ------
    CompositionError
        When an argument has a nonzero constant term.
    DimensionMismatch
        When the number of arguments differs from f's variable count.
    """
    return f.compose(args)


@_timed_operation
def invert_series(f: TruncatedSeries) -> TruncatedSeries:
    """
    Multiplicative inverse of a series.

    Raises
    ------
    NotAUnit
        When the constant term is not a unit.
    """
    return f.inverse()


@_timed_operation
def revert_series(f: TruncatedSeries) -> TruncatedSeries:
    """
    Compositional inverse g of a one-variable series, f(g(x)) = x.

    Raises
    ------
    CompositionError
        When f has a constant term or its linear coefficient is not a unit.
    """
    return f.revert()
# endregion


# region Groups
@_timed_operation
def char_pullback(V: Character, alpha: GroupHom) -> Character:
    """α^*(V) = V·M for the matrix M of α."""
    return _groups.char_pullback(V, alpha)


@_timed_operation
def primitive_and_split(V: Character):
    """
    Write V = d·W with W primitive.

    Parameters
    ----------
    V : Character

    Returns
    -------
    tuple of (int, Character)
        The content d and the primitive character W.
    """
    return _groups.primitive_and_split(V)


@_timed_operation
def kernel_subgroup(group: GroupSpec, V: Character):
    """
    The kernel of V with its inclusion, and a retraction when V is split.

    Raises
    ------
    ZeroCharacter
        When V is zero on the group.
    """
    return _groups.kernel_subgroup(group, V)
# endregion


# region Laws
@_timed_operation
def multiplicative_law(ring: Union[CoefficientRing, str, None] = None) -> GlobalLaw:
    """
    The representation-ring law, X(T^r) = k[t_1^±1, ..., t_r^±1].

    Parameters
    ----------
    ring : CoefficientRing or str, optional
        Coefficients; defaults to Z.

    Returns
    -------
    GlobalLaw

    Raises
    ------
    RingMismatch
        When `ring` is neither a CoefficientRing nor a ring label.
    """
    return _laws.multiplicative_law(_ring(ring))


@_timed_operation
def additive_law(ring: Union[CoefficientRing, str, None] = None) -> GlobalLaw:
    """
    The additive law, X(T^r) = k[e_1, ..., e_r] with e_V = Σ v_i·e_i.

    Parameters
    ----------
    ring : CoefficientRing or str, optional
        Coefficients; defaults to Z.

    Returns
    -------
    GlobalLaw
    """
    return _laws.additive_law(_ring(ring))


@_timed_operation
def two_torsion_additive_law() -> GlobalLaw:
    """The additive law over F2 on elementary abelian 2-groups."""
    return _laws.two_torsion_additive_law()


@_timed_operation
def from_fgl(fgl: TruncatedFGL, truncation: Optional[int] = None) -> GlobalLaw:
    """
    The complete law of a truncated formal group law.

    Parameters
    ----------
    fgl : TruncatedFGL
    truncation : int, optional
        Cuts F down to degree truncation - 1.

    Returns
    -------
    GlobalLaw
        Values are truncated power series rings, so they are never
        treated as domains.

    Raises
    ------
    InvalidFGL
        When F fails commutativity or associativity.
    """
    return _laws.from_fgl(fgl, truncation)


@_timed_operation
def base_change(law: GlobalLaw, target: Union[CoefficientRing, str]) -> GlobalLaw:
    """
    X ⊗ k' along the canonical ring map.

    Raises
    ------
    NotARingMap
        When the law's ring has no ring map to `target`.
    """
    return _laws.base_change(law, target)


@_timed_operation
def kan_value(law: GlobalLaw, group: GroupSpec):
    """
    The value of the Kan extension at a quotient-presented group.

    Parameters
    ----------
    law : GlobalLaw
        A law defined on tori.
    group : GroupSpec

    Returns
    -------
    Presentation

    Raises
    ------
    FamilyMismatch
        When the law is not defined on tori.
    """
    return _laws.kan_value(law, group)


@_timed_operation
def kan_restrict(law: GlobalLaw, alpha: GroupHom):
    return _laws.kan_restrict(law, alpha)


@_timed_operation
def check_lift_independence(law: GlobalLaw, alpha: GroupHom, beta: GroupHom, x: LawElement) -> bool:
    """
    True when restricting x through two lifts of one map agrees.

    Raises
    ------
    GroupSyntaxError
        When α and β do not lift the same homomorphism.
    """
    return _laws.check_lift_independence(law, alpha, beta, x)
# endregion


# region Euler classes and regularity
@_timed_operation
def euler_class(law: GlobalLaw, group: GroupSpec, V) -> LawElement:
    """
    The Euler class e_V in X(A).

    Parameters
    ----------
    law : GlobalLaw
    group : GroupSpec
    V : Character or sequence of int

    Returns
    -------
    LawElement

    Raises
    ------
    FamilyMismatch
        When the group is outside the law's family.
    """
    return _regularity.euler_class(law, group, V)


@_timed_operation
def check_exact_sequence(law: GlobalLaw, group: GroupSpec, V, bound: Optional[int] = None):
    """
    Check 0 → X(A) → X(A) → X(ker V) → 0 at (A, V).

    Parameters
    ----------
    law : GlobalLaw
    group : GroupSpec
    V : Character or sequence of int
    bound : int, optional
        Monomial search bound; defaults to ComputeOptions().bound.

    Returns
    -------
    RegularityReport

    Raises
    ------
    ZeroCharacter
        When V is zero on the group.
    """
    return _regularity.check_exact_sequence(law, group, V, ComputeOptions(bound=bound).bound)


@_timed_operation
def check_k_regular(law: GlobalLaw, chars: Sequence, bound: Optional[int] = None, group: Optional[GroupSpec] = None):
    """
    Check that the Euler classes of `chars` form a regular sequence.

    Parameters
    ----------
    law : GlobalLaw
    chars : sequence of Character or sequence of int
    bound : int, optional
    group : GroupSpec, optional
        Defaults to T^r, or C2^r for the 2-torsion law.

    Returns
    -------
    RegularityReport

    Raises
    ------
    DependentCharacters
        When the characters are linearly dependent.
    """
    return _regularity.check_k_regular(law, chars, ComputeOptions(bound=bound).bound, group)


@_timed_operation
def check_exactness(law: GlobalLaw, group: GroupSpec, chars, bound: Optional[int] = None, jobs: Optional[int] = None):
    """
    Exactness or regularity checks routed by the shape of `chars`.

    Parameters
    ----------
    law : GlobalLaw
    group : GroupSpec
    chars :
        - one character: a single check_exact_sequence, returns a report;
        - a list of characters: one exactness check each, returns a list;
        - a list of character tuples: one check_k_regular each, returns a list.
    bound, jobs : int, optional

    Raises
    ------
    DimensionMismatch
        When a character does not fit the group.
    """
    options = ComputeOptions(bound=bound, jobs=jobs)
    task = _TASK_MAP.get(determine_task_type(chars, group.rank))
    return task(law, group, chars, options.bound, options.jobs)


@_timed_operation
def split_decompose(law: GlobalLaw, group: GroupSpec, V, x: LawElement, n: int):
    """
    x = Σ r^*(x_i)·e_V^i + x̃·e_V^n along a split character V.

    Returns
    -------
    SplitDecomposition

    Raises
    ------
    GroupSyntaxError
        When V is not split.
    NotDivisible
        When a division by e_V is not exact.
    """
    return _regularity.split_decompose(law, group, V, x, n)


@_timed_operation
def psi(law: GlobalLaw, n: int) -> LawElement:
    """
    ψ_n in X(T), defined by e_n = Π_{d|n} ψ_d.

    Raises
    ------
    PsiUnavailable
        When the law has no circle or X(T) is not a domain.
    NotDivisible
        When a defining division is not exact.
    ValueError
        When n < 1.
    """
    return _regularity.psi(law, n)


@_timed_operation
def check_euler_product(law: GlobalLaw, n: int) -> bool:
    return _regularity.check_euler_product(law, n)


@_timed_operation
def p2_leading_term_check(fgl: TruncatedFGL, V1: Sequence[int], V2: Sequence[int]) -> bool:
    """
    Leading-term check for two characters of a 2-torsion law.

    Raises
    ------
    DependentCharacters
        When V1 and V2 are dependent.
    """
    return _regularity.p2_leading_term_check(fgl, V1, V2)


@_timed_operation
def two_torsion_sum_relation(law: GlobalLaw):
    """
    e_{1,1} against e_{1,0} + e_{0,1} at C2 × C2.

    Returns
    -------
    SumRelation

    Raises
    ------
    FamilyMismatch
        When the law is not defined on elementary abelian 2-groups.
    """
    return _regularity.two_torsion_sum_relation(law)
# endregion


# region Completion
@_timed_operation
def flag_expand(law: GlobalLaw, group: GroupSpec, flag, x: LawElement):
    """
    Expand x in X(A × T) along a flag.

    Parameters
    ----------
    law : GlobalLaw
    group : GroupSpec
        The base group A.
    flag : Flag or sequence of characters of A
    x : LawElement
        An element at A × T.

    Returns
    -------
    FlagExpansion

    Raises
    ------
    NotDivisible
        When a division step fails.
    """
    flag = flag if isinstance(flag, _completion.Flag) else _completion.Flag.of(group, flag)
    return _completion.flag_expand(law, group, flag, x)


@_timed_operation
def theta_eval(expansion, V) -> LawElement:
    return _completion.theta_eval(expansion, V)


@_timed_operation
def completed_fgl(law: GlobalLaw, group: GroupSpec, depth: Optional[int] = None, flag=None):
    """
    The completion of a law at A, as A-equivariant formal group law data.

    Parameters
    ----------
    law : GlobalLaw
    group : GroupSpec
    depth : int, optional
        Flag depth; defaults to ComputeOptions().depth.
    flag : Flag or sequence of characters, optional
        Defaults to the standard flag of the group.

    Returns
    -------
    CompletedFGL

    Raises
    ------
    NotDivisible
        When a flag expansion fails.
    """
    if flag is not None and not isinstance(flag, _completion.Flag):
        flag = _completion.Flag.of(group, flag)
    return _completion.completed_fgl(law, group, ComputeOptions(depth=depth).depth, flag)


@_timed_operation
def n_series(fgl: TruncatedFGL, n: int) -> TruncatedSeries:
    """[n]_F(x) through the truncation of F."""
    return _completion.n_series(fgl, n)


@_timed_operation
def formal_inverse(fgl: TruncatedFGL) -> TruncatedSeries:
    return fgl.formal_inverse()


@_timed_operation
def fgl_sum(fgl: TruncatedFGL, vector: Sequence[int]) -> TruncatedSeries:
    return fgl.fgl_sum(vector, len(vector))


@_timed_operation
def gamma_coefficients(law: GlobalLaw, group: GroupSpec, V, depth: Optional[int] = None) -> List[LawElement]:
    """Coefficients γ_i with y(ε) = e_{V^-1} + Σ γ_i y(V)^(i+1)."""
    return _completion.gamma_coefficients(law, group, V, ComputeOptions(depth=depth).depth)


@_timed_operation
def unit_criterion(law: GlobalLaw, lam: LawElement, flag=None) -> bool:
    return _completion.unit_criterion(law, lam, flag)


@_timed_operation
def change_coordinate(law: GlobalLaw, lam, check_strict: bool = True, depth: Optional[int] = None):
    """
    The law with coordinate λ·e.

    Parameters
    ----------
    law : GlobalLaw
    lam : LawElement or str
        An element of X(T).
    check_strict : bool
        Require λ to augment to 1.
    depth : int, optional
        Depth of the unit check.

    Returns
    -------
    GlobalLaw

    Raises
    ------
    NotAUnit
        When λ is not a unit of the completion.
    NotStrict
        When `check_strict` is set and λ does not augment to 1.
    """
    return _completion.change_coordinate(law, lam, check_strict, ComputeOptions(depth=depth).depth)


@_timed_operation
def strict_iso(fgl: TruncatedFGL, lam: TruncatedSeries, target: Optional[TruncatedFGL] = None):
    """
    φ(x) = λ̂(x)·x and the law it conjugates F to.

    Parameters
    ----------
    fgl : TruncatedFGL
    lam : TruncatedSeries
        One-variable series with constant term 1.
    target : TruncatedFGL, optional
        The expected conjugate.

    Returns
    -------
    StrictIso

    Raises
    ------
    NotStrict
        When λ̂(0) is not 1.
    InvalidFGL
        When the conjugate differs from `target`.
    """
    return _completion.strict_iso(fgl, lam, target)


@_timed_operation
def random_fgl(ring: Union[CoefficientRing, str, None], N: int, rng=None) -> TruncatedFGL:
    """A valid law through degree N, conjugate to the additive law by a random strict φ."""
    return _completion.random_fgl(_ring(ring), N, rng)
# endregion


# region Fixed points
@_timed_operation
def loc_eq(law: GlobalLaw, a, b) -> bool:
    """
    a = b in X(A) with Euler classes inverted.

    Raises
    ------
    UndecidablePresentation
        When X(A) is not a domain and no cyclic model applies.
    DimensionMismatch
        When a and b live at different groups.
    """
    return _fixed_points.loc_eq(law, a, b)


@_timed_operation
def cyclic_fixed_points_mult(n: int, ring: Union[CoefficientRing, str, None] = None):
    """
    Geometric fixed points of the multiplicative law at C_n.

    Returns
    -------
    CyclicFixedPoints
        k[t]/(ψ_n) with the images of the Euler classes inverted.

    Raises
    ------
    GroupSyntaxError
        When n < 2.
    PsiUnavailable
        For rings other than Z and Q.
    """
    return _fixed_points.cyclic_fixed_points_mult(n, _ring(ring))


@_timed_operation
def psi_kernel_check(law: GlobalLaw, n: int, bound: Optional[int] = None) -> bool:
    return _fixed_points.psi_kernel_check(law, n, ComputeOptions(bound=bound).bound)
# endregion


# region Lazard desk
@_timed_operation
def universal_relations(N: Optional[int] = None, mode: str = _lazard.PLAIN):
    """
    Relations among the universal coefficients a_ij through degree N.

    Parameters
    ----------
    N : int, optional
        Degree bound; defaults to ComputeOptions().degree.
    mode : str
        'plain' or 'two-torsion'.

    Returns
    -------
    RelationSystem

    Raises
    ------
    DimensionMismatch
        When N < 2.
    GroupSyntaxError
        For an unknown mode.
    """
    return _lazard.universal_relations(ComputeOptions(degree=N).degree, mode)


@_timed_operation
def validate_fgl(fgl: TruncatedFGL):
    """Violated axioms of F, lowest degree first; empty when F is valid."""
    return _lazard.validate_fgl(fgl)


@_timed_operation
def classify(law: GlobalLaw, depth: Optional[int] = None) -> TruncatedFGL:
    """
    The formal group law of a global law at the trivial group.

    Raises
    ------
    InvalidFGL
        When the extracted law fails validation.
    """
    return _lazard.classify(law, ComputeOptions(depth=depth).depth)


@_timed_operation
def indecomposable_ranks(system, field_ring=None):
    return _lazard.indecomposable_ranks(system, field_ring)


@_timed_operation
def smith_invariants(system):
    return _lazard.smith_invariants(system)
# endregion


def _ring(ring: Union[CoefficientRing, str, None]) -> CoefficientRing:
    if ring is None:
        return CoefficientRing.integers()
    if isinstance(ring, str):
        return CoefficientRing.parse(ring)
    if not isinstance(ring, CoefficientRing):
        raise RingMismatch(f"calculus:_ring:expected a CoefficientRing or label, got {ring!r}")
    return ring
