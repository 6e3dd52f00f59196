"""
Global Group Laws: Euler Classes and ψ Factorization Module

Euler classes e_V = V^*(e), the factorization e_n = ∏_{m|n} ψ_m of the
Euler classes of the power maps of the circle, the leading-term check of
n-series behind (p, 2)-regularity, and the sum relation of 2-torsion
laws at C2 × C2.

Functions Overview
------------------
- euler_class(X, A, V)
- psi(X, n), psi_table(X, n), check_euler_product(X, n)
- p2_leading_term_check(F, V1, V2)
- two_torsion_sum_relation(X)
"""

# Standard library imports
import logging
from dataclasses import dataclass
from typing import Dict, Sequence

# Third-party library imports
from sympy import divisors

# Local application/library specific imports
from ..exceptions import DependentCharacters, FamilyMismatch, NotAUnit, NotDivisible, PsiUnavailable
from ..groups import (
    Character,
    Family,
    GroupSpec,
    diagonal,
    elem2,
    kernel_subgroup,
    primitive_and_split,
)
from ..kernel import TruncatedFGL
from ..laws import GlobalLaw, LawElement
from ._exactness import _character, _independent

logger = logging.getLogger(__name__)


def euler_class(law: GlobalLaw, group: GroupSpec, V) -> LawElement:
    """e_V ∈ X(A), the restriction of the coordinate along V.

    Raises
    ------
    FamilyMismatch
        When A is not in the law's family.
    """
    law.check_family(group)
    return law.euler_class(group, _character(group, V))


# region psi
def psi_table(law: GlobalLaw, n: int) -> Dict[int, LawElement]:
    """ψ_d for every divisor d of n.

    Raises
    ------
    PsiUnavailable
        When X(T) is not known to be a domain.
    NotDivisible
        When one of the defining divisions is not exact.
    """
    if n < 1:
        raise ValueError(f"regularity:psi:n must be positive, got {n}")
    if law.family is not Family.TORI:
        raise PsiUnavailable(f"regularity:psi:{law.law_id} has no circle, so ψ is undefined")
    circle = law.circle()
    if not law.value(circle).is_domain():
        raise PsiUnavailable(f"regularity:psi:X(T) = {law.value(circle).describe()} is not a domain")
    table: Dict[int, LawElement] = {}
    for d in divisors(n):
        euler = law.euler_class(circle, Character((d,)))
        product = law.one(circle)
        for m, factor in table.items():
            if d % m == 0:
                product = product * factor
        try:
            table[d] = euler.divide(product)
        except NotDivisible as err:
            raise NotDivisible(
                f"regularity:psi:e_{d} = {euler} is not divisible by ∏ ψ_m (m | {d}, m < {d}) = {product}") from err
        logger.debug(f"regularity:psi:{law.law_id} ψ_{d} = {table[d]}")
    return table


def psi(law: GlobalLaw, n: int) -> LawElement:
    """ψ_n, characterised by e_n = ∏_{m|n} ψ_m."""
    return psi_table(law, n)[n]


def check_euler_product(law: GlobalLaw, n: int) -> bool:
    """Recompute ∏_{m|n} ψ_m and compare with e_n."""
    table = psi_table(law, n)
    product = law.one(law.circle())
    for factor in table.values():
        product = product * factor
    return product == law.euler_class(law.circle(), Character((n,)))
# endregion


def p2_leading_term_check(fgl: TruncatedFGL, V1: Sequence[int], V2: Sequence[int]) -> bool:
    """[n_i]_F has leading term n_i·x for the multiplicities n_i of V1, V2.

    Raises
    ------
    DependentCharacters
        When V1, V2 are dependent.
    NotAUnit
        When a multiplicity is not a unit of the ground ring.
    """
    chars = [Character(tuple(V)) for V in (V1, V2)]
    if not _independent(chars, 0):
        raise DependentCharacters(f"regularity:p2_leading_term_check:{chars[0]} and {chars[1]} are dependent")
    ok = True
    for V in chars:
        n, _ = primitive_and_split(V)
        c = fgl.ring.convert(n)
        if not fgl.ring.is_unit(c):
            raise NotAUnit(f"regularity:p2_leading_term_check:multiplicity {n} of {V} is not a unit in {fgl.ring.label}")
        coefficients = fgl.n_series(n).univariate_coefficients()
        leading = next((k for k, a in enumerate(coefficients) if a), None)
        if leading != 1 or coefficients[1] != c:
            logger.info(f"regularity:p2_leading_term_check:[{n}]_F does not start with {n}*x")
            ok = False
    return ok


@dataclass
class SumRelation:
    """e_{1,1} = e_{1,0} + e_{0,1} + x'·e_{1,0}·e_{0,1} at C2 × C2.

    Parameters
    ----------
    leading : LawElement
        Restriction of (e_{1,1} - e_{1,0}) / e_{0,1} to the second factor;
        1 in a global law.
    x_prime : LawElement
    residual : LawElement
        The diagonal restriction 2e + Δ^*(x')·e² at C2.
    holds : bool
        Whether the reassembled relation reproduces e_{1,1}.
    """

    leading: LawElement
    x_prime: LawElement
    residual: LawElement
    holds: bool

    def to_json_dict(self) -> dict:
        return {'leading': str(self.leading), 'x_prime': str(self.x_prime),
                'residual': str(self.residual), 'holds': self.holds}


def two_torsion_sum_relation(law: GlobalLaw) -> SumRelation:
    """Derive the sum relation of a 2-torsion law at C2 × C2.

    Raises
    ------
    FamilyMismatch
        When the law is not defined on elementary abelian 2-groups.
    NotDivisible
        When one of the two divisions fails.
    """
    if law.family is not Family.ELEM2:
        raise FamilyMismatch(f"regularity:two_torsion_sum_relation:{law.law_id} is not a 2-torsion law")
    group = elem2(2)
    e10 = law.euler_class(group, group.character((1, 0)))
    e01 = law.euler_class(group, group.character((0, 1)))
    e11 = law.euler_class(group, group.character((1, 1)))
    y = (e11 - e10).divide(e01)
    splitting = kernel_subgroup(group, group.character((1, 0)))
    leading = law.restrict(splitting.inclusion, y)
    x_prime = (y - law.restrict(splitting.retraction, leading)).divide(e10)
    holds = leading == 1 and e11 == e10 + e01 + x_prime * e10 * e01
    residual = law.restrict(diagonal(group), e10 + e01 + x_prime * e10 * e01)
    logger.debug(f"regularity:two_torsion_sum_relation:x' = {x_prime}, residual = {residual}")
    return SumRelation(leading, x_prime, residual, holds)
