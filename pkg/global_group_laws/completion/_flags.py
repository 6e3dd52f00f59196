"""
Global Group Laws: Flag Expansions Module

For a global law X, a group A and a flag (V_1, ..., V_n) of characters of
A, every x ∈ X(A × T) has a unique expansion

    x = a_0 + a_1·y(V_1) + a_2·y(V_1)y(V_2) + ... (mod y(V_1)⋯y(V_n))

with a_i ∈ X(A), where y(V) is the Euler class of the character
(a, z) ↦ V(a)·z of A × T. Each a_i is the restriction of the running
remainder along the graph of -V_i, and the remainder is then divided by
y(V_i).

Functions Overview
------------------
- Flag, FlagExpansion
- default_flag(A, depth): ε, W_1, -W_1, W_2, -W_2, ... repeated.
- flag_expand(X, A, flag, x), reassemble(expansion)
- theta_eval(expansion, V): the augmentation θ(V) applied to x.
- gamma_coefficients(X, A, V, depth)
- unit_criterion(X, λ, flag)
"""

# Standard library imports
import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

# Local application/library specific imports
from ..exceptions import DimensionMismatch
from ..groups import Character, GroupKind, GroupSpec, elem2, graph, projection, quotient, torus
from ..laws import GlobalLaw, LawElement

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Flag:
    """An ordered, nonempty list of characters of A."""

    group: GroupSpec
    chars: tuple

    def __post_init__(self):
        if not self.chars:
            raise DimensionMismatch("completion:Flag:a flag needs at least one character")
        for V in self.chars:
            if V.rank != self.group.rank:
                raise DimensionMismatch(f"completion:Flag:{V} is not a character of {self.group}")

    @classmethod
    def of(cls, group: GroupSpec, chars: Sequence) -> 'Flag':
        return cls(group, tuple(V if isinstance(V, Character) else group.character(tuple(V)) for V in chars))

    @property
    def depth(self) -> int:
        return len(self.chars)

    def is_epsilon_leading(self) -> bool:
        return self.group.is_zero_character(self.chars[0])

    def prefix(self, depth: int) -> 'Flag':
        return Flag(self.group, self.chars[:depth])

    def to_json(self) -> List[list]:
        return [list(V.entries) for V in self.chars]


def default_flag(group: GroupSpec, depth: int) -> Flag:
    """ε-leading cyclic flag over {0, ±W_1, ..., ±W_r}."""
    cycle = [Character.zero(group.rank, group.modulus)]
    for i in range(group.rank):
        W = Character.basis(group.rank, i, group.modulus)
        cycle.append(W)
        if not group.modulus:
            cycle.append(-W)
    return Flag(group, tuple(cycle[k % len(cycle)] for k in range(int(depth))))


def y_class(law: GlobalLaw, group: GroupSpec, V: Character) -> LawElement:
    """y(V) = e_{(V, 1)} ∈ X(A × T)."""
    big = group.times_circle()
    return law.euler_class(big, big.character(tuple(V.entries) + (1,)))


@dataclass
class FlagExpansion:
    """Coefficients a_0..a_{n-1} ∈ X(A) of x along a flag.

    `remainder` is the element x̃ ∈ X(A × T) with
    x = Σ a_i·y(V_1)⋯y(V_i) + x̃·y(V_1)⋯y(V_n).
    """

    flag: Flag
    coeffs: List[LawElement]
    remainder: Optional[LawElement] = None
    law: Optional[GlobalLaw] = field(default=None, repr=False)

    def __post_init__(self):
        if len(self.coeffs) != self.flag.depth:
            raise DimensionMismatch(
                f"completion:FlagExpansion:{len(self.coeffs)} coefficients for a flag of depth {self.flag.depth}")
        if self.law is None and self.coeffs:
            self.law = self.coeffs[0].law

    def __eq__(self, other):
        if not isinstance(other, FlagExpansion):
            return NotImplemented
        return self.flag == other.flag and all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def to_json_dict(self) -> dict:
        return {'flag': self.flag.to_json(), 'coeffs': [c.payload.to_json_dict() for c in self.coeffs]}

    def __str__(self):
        return '(' + ', '.join(str(c) for c in self.coeffs) + ')'


def flag_expand(law: GlobalLaw, group: GroupSpec, flag: Flag, x: LawElement) -> FlagExpansion:
    """Expand x ∈ X(A × T) along the flag.

    Raises
    ------
    NotDivisible
        When a remainder is not divisible by y(V_i); the law is then not
        global at (A × T, (V_i, 1)).
    """
    big = group.times_circle()
    if flag.group != group:
        raise DimensionMismatch(f"completion:flag_expand:flag lives on {flag.group}, not {group}")
    if x.group != big:
        raise DimensionMismatch(f"completion:flag_expand:element lives at {x.group}, expected {big}")
    pr = projection(group)
    remainder = x
    coeffs = []
    for V in flag.chars:
        a = law.restrict(graph(group, -V), remainder)
        coeffs.append(a)
        remainder = (remainder - law.restrict(pr, a)).divide(y_class(law, group, V))
    logger.debug(f"completion:flag_expand:{law.law_id} at {group}, depth {flag.depth}")
    return FlagExpansion(flag, coeffs, remainder, law)


def reassemble(expansion: FlagExpansion) -> LawElement:
    """Σ a_i·y(V_1)⋯y(V_i) + x̃·y(V_1)⋯y(V_n) ∈ X(A × T)."""
    law, group = expansion.law, expansion.flag.group
    pr = projection(group)
    big = group.times_circle()
    total = law.zero(big)
    basis = law.one(big)
    for a, V in zip(expansion.coeffs, expansion.flag.chars):
        total = total + law.restrict(pr, a) * basis
        basis = basis * y_class(law, group, V)
    if expansion.remainder is not None:
        total = total + expansion.remainder * basis
    return total


def theta_eval(expansion: FlagExpansion, V) -> LawElement:
    """θ(V)(x) = Σ a_i·e_{V+V_1}⋯e_{V+V_i} ∈ X(A)."""
    law, group = expansion.law, expansion.flag.group
    V = V if isinstance(V, Character) else group.character(tuple(V))
    total = law.zero(group)
    basis = law.one(group)
    for a, W in zip(expansion.coeffs, expansion.flag.chars):
        total = total + a * basis
        basis = basis * law.euler_class(group, V + W)
    return total


def gamma_coefficients(law: GlobalLaw, group: GroupSpec, V, depth: int) -> List[LawElement]:
    """γ_0, γ_1, ... with y(ε) = e_{-V} + Σ γ_i·y(V)^{i+1}."""
    V = V if isinstance(V, Character) else group.character(tuple(V))
    flag = Flag(group, (V,) * (int(depth) + 1))
    y_epsilon = y_class(law, group, Character.zero(group.rank, group.modulus))
    expansion = flag_expand(law, group, flag, y_epsilon)
    return expansion.coeffs[1:]


def unit_criterion(law: GlobalLaw, lam: LawElement, flag: Optional[Flag] = None) -> bool:
    """λ ∈ X(A × T) is a unit of the completion when each augmentation θ(V)(λ),
    V in the flag, is a unit of X(A)."""
    big = lam.group
    group = flag.group if flag is not None else _base_of(big)
    if flag is None:
        flag = default_flag(group, 1)
    seen = set()
    for V in flag.chars:
        key = group.reduce_character(V).entries
        if key in seen:
            continue
        seen.add(key)
        augmentation = law.restrict(graph(group, V), lam)
        if not augmentation.is_unit():
            logger.info(f"completion:unit_criterion:θ({V})(λ) = {augmentation} is not a unit")
            return False
    return True


def _base_of(big: GroupSpec) -> GroupSpec:
    """A for a group presented as A × T (the last circle factor dropped)."""
    if big.rank < 1:
        raise DimensionMismatch(f"completion:{big} has no circle factor")
    if big.kind is GroupKind.ELEM2:
        return elem2(big.rank - 1)
    if big.kind is GroupKind.TORUS:
        return torus(big.rank - 1)
    return quotient(big.rank - 1, [Character(V.entries[:-1]) for V in big.kernel_chars])
