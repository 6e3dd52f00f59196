"""
Global Group Laws: Regularity Reports Module

Verdict records returned by the exactness and regularity checks, plus
the split decomposition result type.
"""

# Standard library imports
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

# Local application/library specific imports
from ..laws import LawElement

PASS = 'pass'
FAIL = 'fail'


@dataclass
class RegularityReport:
    """Outcome of an exactness or regularity check.

    Parameters
    ----------
    law_id : str
    group : str
        Label of the group the check ran at.
    chars : list of tuple
        The character, or the ordered tuple of characters, tested.
    verdict : str
        'pass' or 'fail'.
    bound : int
        Monomial search bound used for the parts that are not certified.
    certified : bool
        True when a pass rests on the value ring being a known domain
        rather than on a bounded search.
    witness : LawElement, optional
        Element exhibiting a failure; always present on 'fail'.
    reason : str
        Which part of the check failed, or what was certified.
    rational_kernel : bool
        True when kernel containment was searched through the rational
        nullspace of an integral coefficient ring. Integer kernel elements
        that only exist modulo torsion are not found by that search.
    """

    law_id: str
    group: str
    chars: List[tuple]
    verdict: str
    bound: int
    certified: bool = False
    witness: Optional[LawElement] = None
    reason: str = ''
    rational_kernel: bool = False

    def __post_init__(self):
        if self.verdict == FAIL and self.witness is None:
            raise ValueError("regularity:RegularityReport:a failing report needs a witness")

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    @property
    def scope(self) -> str:
        if not self.passed:
            return 'counterexample'
        scope = 'certified' if self.certified else f"pass up to bound {self.bound}"
        if self.rational_kernel:
            scope += ', kernel searched over Q (torsion not searched)'
        return scope

    def to_json_dict(self) -> dict:
        return {
            'law': self.law_id,
            'group': self.group,
            'chars': [list(V) for V in self.chars],
            'verdict': self.verdict,
            'scope': self.scope,
            'bound': self.bound,
            'witness': None if self.witness is None else str(self.witness),
            'reason': self.reason,
            'rational_kernel': self.rational_kernel,
        }

    def __str__(self):
        text = f"{self.verdict} ({self.scope})"
        if self.witness is not None:
            text += f"\nwitness: {self.witness}"
        if self.reason:
            text += f"\n{self.reason}"
        return text


@dataclass
class SplitDecomposition:
    """x = Σ r^*(x_i)·e_V^i + remainder·e_V^n for the retraction r onto ker V."""

    coefficients: List[LawElement]
    remainder: LawElement
    euler: LawElement
    lifts: List[LawElement] = field(default_factory=list)

    def reassemble(self) -> LawElement:
        total = self.remainder * (self.euler ** len(self.coefficients))
        power = self.euler.law.one(self.euler.group)
        for lift in self.lifts:
            total = total + lift * power
            power = power * self.euler
        return total

    def to_json_dict(self) -> dict:
        return {
            'coefficients': [str(c) for c in self.coefficients],
            'remainder': str(self.remainder),
        }


def chars_key(chars: Sequence) -> List[tuple]:
    return [tuple(V.entries) for V in chars]
