"""
Global Group Laws: Exactness and Regularity Module

Checks of the defining exact sequences

    0 → X(A) --e_V--> X(A) --res--> X(ker V) → 0

and of regularity of Euler-class sequences, plus the split decomposition
x = Σ r^*(x_i)·e_V^i + x̃·e_V^n along a split character.

Where the value ring is a known integral domain, nonzero Euler classes
are certified regular; elsewhere annihilators and kernel elements are
searched for among monomials (and their linear combinations) up to a
bound, and a pass is reported as a pass up to that bound.

Functions Overview
------------------
- check_exact_sequence(X, A, V, bound)
- check_k_regular(X, chars, bound, group=None)
- split_decompose(X, A, V, x, n)
"""

# Standard library imports
import logging
from math import gcd
from typing import List, Optional, Sequence

# Third-party library imports
from sympy import QQ, ilcm

# Local application/library specific imports
from ..exceptions import DependentCharacters, DimensionMismatch, GroupSyntaxError, ZeroCharacter
from ..groups import Character, Family, GroupSpec, elem2, kernel_subgroup, torus
from ..kernel import CoefficientRing, LaurentPoly, RingKind, field_nullspace, field_rank
from ..laws import GlobalLaw, LawElement, Presentation, TruncatedPresentation
from ._reports import FAIL, PASS, RegularityReport, SplitDecomposition, chars_key

logger = logging.getLogger(__name__)

DEFAULT_BOUND = 3


# region linear helpers
def _kernel_combinations(images: Sequence[LaurentPoly], ring: CoefficientRing) -> List[list]:
    """Coefficient vectors c (over the ring) spanning {c : Σ c_j·images[j] = 0}.

    Over Z the rational kernel is scaled to primitive integer vectors.
    Polynomial coefficient rings are not searched.
    """
    if ring.kind is RingKind.POLYNOMIAL or not images:
        return []
    domain = ring.domain if ring.is_field else QQ
    index = {}
    for p in images:
        for exp in p.terms:
            index.setdefault(exp, len(index))
    rows = [[domain.zero] * len(images) for _ in index]
    for j, p in enumerate(images):
        for exp, c in p.terms.items():
            rows[index[exp]][j] = domain.convert(c) if ring.is_field else QQ(int(c))
    basis = field_nullspace(rows, len(images), domain)
    if ring.is_field:
        return basis
    vectors = []
    for vec in basis:
        scale = 1
        for q in vec:
            scale = ilcm(scale, int(q.denominator))
        ints = [int(q.numerator) * (scale // int(q.denominator)) for q in vec]
        content = 0
        for v in ints:
            content = gcd(content, v)
        vectors.append([ring.convert(v // content) for v in ints] if content else [ring.zero] * len(ints))
    return vectors


def _combine(candidates: Sequence[LaurentPoly], vector: Sequence, ring: CoefficientRing, nvars: int) -> LaurentPoly:
    total = LaurentPoly.zero(ring, nvars)
    for c, m in zip(vector, candidates):
        if c:
            total = total + m.scale(c)
    return total


def _search_candidates(presentation: Presentation, e: LaurentPoly, bound: int) -> List[LaurentPoly]:
    candidates = presentation.monomials(bound)
    if isinstance(presentation, TruncatedPresentation):
        # products past the truncation vanish for reasons of precision only
        limit = presentation.precision_after(e)
        candidates = [m for m in candidates if m.total_degree() < limit]
    return candidates


def find_annihilator(presentation: Presentation, e: LaurentPoly, bound: int) -> Optional[LaurentPoly]:
    """A nonzero x with x·e = 0 among bounded candidates, or None."""
    candidates = _search_candidates(presentation, e, bound)
    for m in candidates:
        if presentation.reduce(m * e).is_zero():
            return presentation.reduce(m)
    products = [presentation.reduce(m * e) for m in candidates]
    for vector in _kernel_combinations(products, presentation.ring):
        x = presentation.reduce(_combine(candidates, vector, presentation.ring, presentation.nvars))
        if not x.is_zero():
            return x
    return None
# endregion


def _character(group: GroupSpec, V) -> Character:
    entries = V.entries if isinstance(V, Character) else tuple(V)
    return group.character(entries)


def check_exact_sequence(law: GlobalLaw, group: GroupSpec, V, bound: int = DEFAULT_BOUND) -> RegularityReport:
    """Check 0 → X(A) → X(A) → X(ker V) → 0 at (A, V).

    Parameters
    ----------
    law : GlobalLaw
    group : GroupSpec
        The group A.
    V : Character or sequence of int
        A nonzero character of A.
    bound : int
        Monomial search bound.

    Returns
    -------
    RegularityReport
        'fail' carries the element that breaks regularity, kernel
        containment or surjectivity.

    Raises
    ------
    ZeroCharacter
        When V is zero on A.
    """
    law.check_family(group)
    V = _character(group, V)
    if group.is_zero_character(V):
        raise ZeroCharacter(f"regularity:check_exact_sequence:{V} is zero on {group}")
    presentation = law.value(group)
    e = law.euler_payload(group, V)
    chars = chars_key([V])

    def _report(verdict, witness=None, reason='', certified=False):
        if verdict == FAIL:
            logger.info(f"regularity:check_exact_sequence:{law.law_id} at {group}, {V}: {reason}")
        return RegularityReport(law.law_id, group.label, chars, verdict, bound, certified,
                                None if witness is None else LawElement(law, witness[0], witness[1]), reason,
                                verdict == PASS and not law.ring.is_field)

    # injectivity of multiplication by e_V
    certified = presentation.is_domain()
    if e.is_zero():
        witness = (presentation.monomials(bound) or [presentation.one()])[0]
        return _report(FAIL, (group, presentation.reduce(witness)), f"e_{V} vanishes in X({group})")
    if not certified:
        annihilator = find_annihilator(presentation, e, bound)
        if annihilator is not None:
            return _report(FAIL, (group, annihilator), f"annihilator of e_{V} found")

    # kernel of the restriction equals (e_V)
    splitting = kernel_subgroup(group, V)
    kernel = splitting.group
    candidates = presentation.monomials(bound)
    images = [law.restrict_payload(splitting.inclusion, m) for m in candidates]
    for vector in _kernel_combinations(images, law.ring):
        x = presentation.reduce(_combine(candidates, vector, law.ring, group.rank))
        if not x.is_zero() and not presentation.divides(e, x):
            return _report(FAIL, (group, x), f"restricts to 0 on {kernel} but is not a multiple of e_{V}")

    # surjectivity through the retraction onto the kernel
    if splitting.split:
        kernel_value = law.value(kernel)
        for y in kernel_value.monomials(bound):
            lifted = law.restrict_payload(splitting.retraction, kernel_value.reduce(y))
            back = law.restrict_payload(splitting.inclusion, lifted)
            if not kernel_value.equal(back, y):
                return _report(FAIL, (kernel, kernel_value.reduce(y)), f"{kernel} element not hit by the retraction")

    logger.debug(f"regularity:check_exact_sequence:{law.law_id} at {group}, {V} passes")
    return _report(PASS, certified=certified)


def _independent(chars: Sequence[Character], modulus: int) -> bool:
    if not chars:
        return True
    domain = CoefficientRing.prime_field(2).domain if modulus == 2 else QQ
    return field_rank([list(V.entries) for V in chars], len(chars[0].entries), domain) == len(chars)


def check_k_regular(law: GlobalLaw, chars: Sequence, bound: int = DEFAULT_BOUND,
                    group: Optional[GroupSpec] = None) -> RegularityReport:
    """Check that (e_{V_1}, ..., e_{V_l}) is a regular sequence in X(A).

    Each e_{V_i} is tested for being a nonzero non-zero-divisor in
    X(A) / (e_{V_1}, ..., e_{V_{i-1}}).

    Raises
    ------
    DependentCharacters
        When the characters are linearly dependent.
    """
    if not chars:
        raise DimensionMismatch("regularity:check_k_regular:no characters given")
    if group is None:
        rank = len(tuple(chars[0].entries if isinstance(chars[0], Character) else chars[0]))
        group = elem2(rank) if law.family is Family.ELEM2 else torus(rank)
    law.check_family(group)
    chars = [_character(group, V) for V in chars]
    if not _independent(chars, group.modulus):
        raise DependentCharacters(
            f"regularity:check_k_regular:{', '.join(str(V) for V in chars)} are linearly dependent")
    certified = True
    for i, V in enumerate(chars):
        quotient = law.value_modulo(group, chars[:i])
        e = quotient.reduce(law.euler_payload(group, V))
        if e.is_zero():
            witness = (quotient.monomials(bound) or [quotient.one()])[0]
            return _k_fail(law, group, chars, bound, quotient, witness,
                           f"e_{V} vanishes modulo the previous Euler classes")
        if quotient.is_domain():
            continue
        certified = False
        annihilator = find_annihilator(quotient, e, bound)
        if annihilator is not None:
            logger.info(f"regularity:check_k_regular:annihilator found for e_{V}")
            return _k_fail(law, group, chars, bound, quotient, annihilator,
                           f"annihilates e_{V} modulo the previous Euler classes")
    return RegularityReport(law.law_id, group.label, chars_key(chars), PASS, bound, certified)


def _k_fail(law, group, chars, bound, quotient: Presentation, witness: LaurentPoly, reason: str) -> RegularityReport:
    # the witness is an element of X(A) read modulo the earlier classes
    element = LawElement(law, group, law.value(group).reduce(quotient.reduce(witness)))
    return RegularityReport(law.law_id, group.label, chars_key(chars), FAIL, bound, False, element, reason)


def split_decompose(law: GlobalLaw, group: GroupSpec, V, x: LawElement, n: int) -> SplitDecomposition:
    """Coefficients x_0, ..., x_{n-1} in X(ker V) and the remainder.

    Raises
    ------
    GroupSyntaxError
        When V is not split on the group.
    NotDivisible
        When a step fails, i.e. the exact sequence breaks at (A, V).
    """
    law.check_family(group)
    V = _character(group, V)
    splitting = kernel_subgroup(group, V)
    if not splitting.split:
        raise GroupSyntaxError(f"regularity:split_decompose:{V} is not split on {group}")
    if x.group != group:
        raise DimensionMismatch(f"regularity:split_decompose:element lives at {x.group}, not {group}")
    euler = law.euler_class(group, V)
    remainder = x
    coefficients, lifts = [], []
    for _ in range(int(n)):
        coefficient = law.restrict(splitting.inclusion, remainder)
        lift = law.restrict(splitting.retraction, coefficient)
        coefficients.append(coefficient)
        lifts.append(lift)
        remainder = (remainder - lift).divide(euler)
    return SplitDecomposition(coefficients, remainder, euler, lifts)
