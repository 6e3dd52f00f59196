"""
Global Group Laws: Coordinate Change Module

Replacing the coordinate e of a global law by λ·e for a unit λ ∈ X(T)
gives the same functor with a new coordinate; at the trivial group this
is the strict isomorphism φ(x) = λ̂(x)·x of formal group laws, where λ̂ is
the flag expansion of λ.

Functions Overview
------------------
- change_coordinate(X, λ, check_strict, depth)
- expansion_series(expansion): a trivial-group flag expansion as a series.
- strict_iso(F, λ̂, target): φ, φ^{-1} and the conjugated law.
- unit_series_of_inverse(φ): μ with φ^{-1}(x) = μ(x)·x.
- random_fgl(ring, N, rng): a valid law conjugate to the additive one.
"""

# Standard library imports
import logging
from dataclasses import dataclass
from typing import Optional, Union

# Third-party library imports
import numpy as np

# Local application/library specific imports
from ..exceptions import DimensionMismatch, InvalidFGL, NotAUnit, NotStrict
from ..groups import Character, graph
from ..kernel import CoefficientRing, LaurentPoly, TruncatedFGL, TruncatedSeries
from ..laws import CoordinateChangedLaw, GlobalLaw, LawElement
from ._completed import DEFAULT_DEPTH
from ._flags import FlagExpansion, default_flag, flag_expand, unit_criterion

logger = logging.getLogger(__name__)


def _as_unit(law: GlobalLaw, lam: Union[LawElement, LaurentPoly, str, int]) -> LawElement:
    if isinstance(lam, LawElement):
        return lam
    return law.element(law.circle(), lam)


def change_coordinate(law: GlobalLaw, lam: Union[LawElement, str], check_strict: bool = True,
                      depth: int = DEFAULT_DEPTH) -> CoordinateChangedLaw:
    """The law with coordinate λ·e.

    Raises
    ------
    NotAUnit
        When an augmentation of λ is not a unit.
    NotStrict
        When check_strict is set and λ does not restrict to 1 at the trivial group.
    """
    lam = _as_unit(law, lam)
    trivial = law.trivial_group()
    flag = default_flag(trivial, depth)
    if not unit_criterion(law, lam, flag):
        raise NotAUnit(f"completion:change_coordinate:{lam} is not a unit of the completion")
    if check_strict:
        augmentation = law.restrict(graph(trivial, Character.zero(0, trivial.modulus)), lam)
        if augmentation != 1:
            raise NotStrict(f"completion:change_coordinate:λ restricts to {augmentation}, not 1, at the trivial group")
    logger.debug(f"completion:change_coordinate:{law.law_id} with λ = {lam}")
    return CoordinateChangedLaw(law, lam)


def expansion_series(expansion: FlagExpansion, trunc: Optional[int] = None) -> TruncatedSeries:
    """Σ a_i x^i for an expansion at the trivial group along the ε-flag."""
    flag = expansion.flag
    if not flag.group.is_trivial():
        raise DimensionMismatch(f"completion:expansion_series:expansion lives over {flag.group}, not the trivial group")
    ring = expansion.law.ring
    coefficients = [a.payload.constant_term() for a in expansion.coeffs]
    return TruncatedSeries.from_coefficients(ring, trunc or flag.depth, coefficients)


def completion_series(law: GlobalLaw, x: LawElement, depth: int = DEFAULT_DEPTH) -> TruncatedSeries:
    """Image of x ∈ X(T) in the trivial-group completion, as a series in y(ε)."""
    trivial = law.trivial_group()
    return expansion_series(flag_expand(law, trivial, default_flag(trivial, depth), x))


@dataclass
class StrictIso:
    """φ: F → F' with F'(φ(x), φ(y)) = φ(F(x, y))."""

    phi: TruncatedSeries
    inverse: TruncatedSeries
    conjugate: TruncatedFGL

    def to_json_dict(self) -> dict:
        return {'phi': str(self.phi), 'inverse': str(self.inverse), 'conjugate': self.conjugate.to_json_dict()}


def _conjugate(fgl: TruncatedFGL, phi: TruncatedSeries, inverse: TruncatedSeries) -> TruncatedFGL:
    x = inverse.embed(2, [0])
    y = inverse.embed(2, [1])
    return TruncatedFGL.from_series(phi.compose([fgl.series().compose([x, y])]), fgl.N)


def strict_iso(fgl: TruncatedFGL, lam: TruncatedSeries, target: Optional[TruncatedFGL] = None) -> StrictIso:
    """φ(x) = λ̂(x)·x and the law it conjugates F to.

    Parameters
    ----------
    fgl : TruncatedFGL
    lam : TruncatedSeries
        One-variable series with constant term 1.
    target : TruncatedFGL, optional
        When given, the conjugated law must agree with it through degree N.

    Raises
    ------
    NotStrict
        When λ̂(0) != 1.
    InvalidFGL
        When the conjugated law differs from `target`.
    """
    if lam.nvars != 1:
        raise DimensionMismatch("completion:strict_iso:λ must be a one-variable series")
    if lam.constant_term() != fgl.ring.one:
        raise NotStrict(f"completion:strict_iso:λ(0) = {fgl.ring.to_string(lam.constant_term())}, not 1")
    x = TruncatedSeries.variable(fgl.ring, 1, fgl.trunc, 0)
    phi = (lam.with_trunc(max(lam.trunc, fgl.trunc)) * x).truncate(fgl.trunc)
    inverse = phi.revert()
    conjugate = _conjugate(fgl, phi, inverse)
    if target is not None:
        N = min(target.N, conjugate.N)
        if conjugate.truncate(N) != target.truncate(N):
            raise InvalidFGL(f"completion:strict_iso:φ conjugates F to {conjugate}, expected {target}")
    return StrictIso(phi, inverse, conjugate)


def unit_series_of_inverse(phi: TruncatedSeries) -> TruncatedSeries:
    """μ with φ^{-1}(x) = μ(x)·x."""
    coefficients = phi.revert().univariate_coefficients()
    return TruncatedSeries.from_coefficients(phi.ring, phi.trunc - 1, coefficients[1:])


def random_fgl(ring: CoefficientRing, N: int, rng: Optional[np.random.Generator] = None,
               spread: int = 2) -> TruncatedFGL:
    """φ(φ^{-1}(x) + φ^{-1}(y)) for a random φ(x) = x + Σ b_k x^{k+1}."""
    rng = rng if rng is not None else np.random.default_rng(0)
    b = [int(v) for v in rng.integers(-spread, spread + 1, size=max(N - 1, 0))]
    phi = TruncatedSeries.from_coefficients(ring, N + 1, [0, 1] + b)
    additive = TruncatedFGL.additive(ring, N)
    return _conjugate(additive, phi, phi.revert())
