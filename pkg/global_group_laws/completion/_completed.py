"""
Global Group Laws: Completion Module

The completion of a global law X at a group A: the ground ring X(A), the
coordinate y(ε) = e_{(0, 1)} ∈ X(A × T) expanded along a flag, the
coproduct obtained by restricting y(ε) along id_A × m: A × T × T → A × T
and expanding twice, the augmentations θ(V)(y(ε)) and the Euler classes
e_V for the flag characters.

At the trivial group the coproduct coefficients are the coefficients of
a formal group law.
"""

# Standard library imports
import logging
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

# Local application/library specific imports
from ..exceptions import DimensionMismatch, InvalidFGL
from ..groups import Character, GroupSpec, multiplication
from ..kernel import TruncatedFGL, TruncatedSeries
from ..laws import GlobalLaw, LawElement, Presentation
from ._flags import Flag, FlagExpansion, default_flag, flag_expand, theta_eval, y_class

logger = logging.getLogger(__name__)

DEFAULT_DEPTH = 6


@dataclass
class CompletedFGL:
    """Truncated A-equivariant formal group law data of a global law."""

    law: GlobalLaw
    group: GroupSpec
    flag: Flag
    ground: Presentation
    coordinate: FlagExpansion
    coproduct: Dict[Tuple[int, int], LawElement] = field(default_factory=dict)
    theta: Dict[Tuple[int, ...], LawElement] = field(default_factory=dict)
    euler: Dict[Tuple[int, ...], LawElement] = field(default_factory=dict)

    @property
    def depth(self) -> int:
        return self.flag.depth

    def to_fgl(self, N: Optional[int] = None) -> TruncatedFGL:
        """The formal group law Σ c_ij x^i y^j at the trivial group.

        Raises
        ------
        DimensionMismatch
            When the completion is not at the trivial group or N exceeds the depth.
        InvalidFGL
            When the extracted series is not of the form x + y + ...
        """
        if not self.group.is_trivial():
            raise DimensionMismatch(f"completion:CompletedFGL.to_fgl:only defined at the trivial group, not {self.group}")
        N = self.depth if N is None else int(N)
        if N > self.depth:
            raise DimensionMismatch(f"completion:CompletedFGL.to_fgl:degree {N} exceeds flag depth {self.depth}")

        def c(i, j):
            return self.coproduct[(i, j)].payload.constant_term()

        ring = self.law.ring
        if c(0, 0) or c(1, 0) != ring.one or c(0, 1) != ring.one:
            raise InvalidFGL("completion:CompletedFGL.to_fgl:coproduct of y(ε) does not start with x + y")
        coefficients = {(i, j): c(i, j) for i in range(1, N) for j in range(1, N - i + 1) if c(i, j)}
        return TruncatedFGL(ring, N, coefficients)

    def to_json_dict(self) -> dict:
        return {
            'law': self.law.law_id,
            'group': self.group.label,
            'flag': self.flag.to_json(),
            'ground': self.ground.describe(),
            'coordinate': [str(c) for c in self.coordinate.coeffs],
            'coproduct': [{'i': i, 'j': j, 'coef': str(c)} for (i, j), c in sorted(self.coproduct.items()) if not c.is_zero()],
            'theta': [{'char': list(V), 'value': str(v)} for V, v in self.theta.items()],
            'euler': [{'char': list(V), 'value': str(v)} for V, v in self.euler.items()],
        }


def completed_fgl(law: GlobalLaw, group: GroupSpec, depth: int = DEFAULT_DEPTH,
                  flag: Optional[Flag] = None) -> CompletedFGL:
    """Completion of X at A to the given flag depth.

    Parameters
    ----------
    law : GlobalLaw
    group : GroupSpec
        The group A.
    depth : int
        Flag depth when no flag is given.
    flag : Flag, optional
        Defaults to the ε-leading cyclic flag.

    Raises
    ------
    NotDivisible
        When one of the flag expansions fails.
    """
    law.check_family(group)
    flag = flag or default_flag(group, depth)
    big = group.times_circle()
    y_epsilon = y_class(law, group, Character.zero(group.rank, group.modulus))
    coordinate = flag_expand(law, group, flag, y_epsilon)

    # Δ(y(ε)): restrict along id × m, expand in the second circle, then in the first
    product = law.restrict(multiplication(group), y_epsilon)
    outer = Flag(big, tuple(big.character(tuple(V.entries) + (0,)) for V in flag.chars))
    second = flag_expand(law, big, outer, product)
    coproduct = {}
    for j, b in enumerate(second.coeffs):
        first = flag_expand(law, group, flag, b)
        for i, c in enumerate(first.coeffs):
            coproduct[(i, j)] = c

    theta, euler = {}, {}
    for V in flag.chars:
        key = tuple(V.entries)
        if key not in theta:
            theta[key] = theta_eval(coordinate, V)
            euler[key] = law.euler_class(group, V)
    logger.debug(f"completion:completed_fgl:{law.law_id} at {group}, depth {flag.depth}")
    return CompletedFGL(law, group, flag, law.value(group), coordinate, coproduct, theta, euler)


def n_series(fgl: TruncatedFGL, n: int) -> TruncatedSeries:
    """[n]_F(x)."""
    return fgl.n_series(n)
