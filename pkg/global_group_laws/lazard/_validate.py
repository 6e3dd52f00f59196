"""
Global Group Laws: FGL Validation and Classification Module

Checks truncated formal group law data against the unit, commutativity
and associativity axioms, and reads off the formal group law classifying
a global law at the trivial group.
"""

# Standard library imports
import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

# Local application/library specific imports
from ..completion import DEFAULT_DEPTH, completed_fgl
from ..exceptions import InvalidFGL
from ..kernel import TruncatedFGL, associativity_residual, commutativity_defects, unit_defects
from ..laws import GlobalLaw

logger = logging.getLogger(__name__)

UNIT = 'unit'
COMMUTATIVITY = 'commutativity'
ASSOCIATIVITY = 'associativity'


@dataclass(frozen=True)
class Violation:
    """A failed axiom at one coefficient.

    `location` is (i, j) for unit and commutativity failures and the
    x^i y^j z^k exponent of the associativity residual otherwise.
    """

    kind: str
    location: Tuple[int, ...]
    value: str

    @property
    def degree(self) -> int:
        return sum(self.location)

    def __str__(self):
        return f"{self.kind} violation at {self.location}: {self.value}"

    def to_json_dict(self) -> dict:
        return {'kind': self.kind, 'location': list(self.location), 'value': self.value}


def validate_fgl(fgl: TruncatedFGL) -> List[Violation]:
    """Violated axioms of F through its truncation degree; empty when F is valid."""
    series = fgl.series()
    ring = fgl.ring
    violations = [Violation(UNIT, key, ring.to_string(series.coefficient(key))) for key in unit_defects(series)]
    for i, j in commutativity_defects(series):
        value = ring.to_string(fgl.coefficient(i, j) - fgl.coefficient(j, i))
        violations.append(Violation(COMMUTATIVITY, (i, j), value))
    residual = associativity_residual(series)
    for exp, c in sorted(residual.poly.terms.items(), key=lambda item: (sum(item[0]), tuple(-e for e in item[0]))):
        if sum(exp) <= fgl.N:
            violations.append(Violation(ASSOCIATIVITY, exp, ring.to_string(c)))
    if violations:
        logger.info(f"lazard:validate_fgl:{len(violations)} violations, first {violations[0]}")
    return violations


def classify(law: GlobalLaw, depth: Optional[int] = None) -> TruncatedFGL:
    """The formal group law of X at the trivial group, through degree `depth`.

    Raises
    ------
    InvalidFGL
        When the extracted law fails validation.
    NotDivisible
        When one of the flag expansions fails.
    """
    depth = DEFAULT_DEPTH if depth is None else int(depth)
    fgl = completed_fgl(law, law.trivial_group(), depth).to_fgl()
    violations = validate_fgl(fgl)
    if violations:
        raise InvalidFGL(f"lazard:classify:{law.law_id} gives an invalid law: {violations[0]}")
    logger.debug(f"lazard:classify:{law.law_id} -> {fgl}")
    return fgl
