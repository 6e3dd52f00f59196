"""
Global Group Laws: Left Kan Extension Module

A law on tori extends to every abelian compact Lie group presented as
T_A / [V_1, ..., V_k]: the value is X(T_A) modulo the Euler classes of the
kernel characters, and a homomorphism between quotient presentations is
computed through any lift to the ambient tori. Different lifts agree on
the quotient.

Functions Overview
------------------
- kan_value(X, G): the presentation of X(G).
- kan_restrict(X, α): the element map α^* between quotient values.
- same_underlying_map(α, β): whether two lifts present the same map.
- check_lift_independence(X, α, β, x): α^*(x) == β^*(x).
"""

# Standard library imports
import logging
from typing import Callable

# Local application/library specific imports
from ..exceptions import FamilyMismatch, GroupSyntaxError
from ..groups import Family, GroupHom, GroupKind, GroupSpec
from ..kernel import in_lattice
from ._base import GlobalLaw, LawElement
from ._presentations import Presentation

logger = logging.getLogger(__name__)


def _require_tori(law: GlobalLaw, group: GroupSpec):
    if law.family is not Family.TORI:
        raise FamilyMismatch(f"laws:kan:{law.law_id} is not defined on tori, so it has no Kan extension")
    if group.kind is GroupKind.ELEM2:
        raise FamilyMismatch(f"laws:kan:{group} is not a quotient of a torus")


def kan_value(law: GlobalLaw, group: GroupSpec) -> Presentation:
    """X(T_A) / (e_V | V a kernel character of the presentation)."""
    _require_tori(law, group)
    return law.value(group)


def kan_restrict(law: GlobalLaw, alpha: GroupHom) -> Callable[[LawElement], LawElement]:
    """Element map X(A) → X(B) for α: B → A, computed through α's lift."""
    _require_tori(law, alpha.source)
    _require_tori(law, alpha.target)

    def _restrict(x: LawElement) -> LawElement:
        return law.restrict(alpha, x)

    return _restrict


def same_underlying_map(alpha: GroupHom, beta: GroupHom) -> bool:
    """True when two lifts induce the same homomorphism of quotient groups.

    The induced maps agree iff every character of the target ambient torus
    pulls back to characters differing by a kernel character of the source.
    """
    if alpha.source != beta.source or alpha.target != beta.target:
        return False
    difference = alpha.matrix - beta.matrix
    lattice = alpha.source.kernel_hnf
    for row in difference:
        entries = tuple(int(v) for v in row)
        if any(entries) and not in_lattice(entries, lattice):
            return False
    return True


def check_lift_independence(law: GlobalLaw, alpha: GroupHom, beta: GroupHom, x: LawElement) -> bool:
    """Restrict x through two lifts of one map and compare.

    Raises
    ------
    GroupSyntaxError
        When α and β do not lift the same homomorphism.
    """
    if not same_underlying_map(alpha, beta):
        raise GroupSyntaxError(
            f"laws:check_lift_independence:{alpha.matrix.tolist()} and {beta.matrix.tolist()} "
            f"are not lifts of one map {alpha.source} -> {alpha.target}")
    left = kan_restrict(law, alpha)(x)
    right = kan_restrict(law, beta)(x)
    agree = left == right
    if not agree:
        logger.warning(f"laws:check_lift_independence:lifts disagree on {x}: {left} != {right}")
    return agree
