"""
Global Group Laws: Cyclic Fixed Points Module

Geometric fixed points of the multiplicative law at C_n. The value
k[t]/(t^n - 1) splits over the divisors of n; inverting the images of
t^k - 1 for 0 < k < n kills every factor except the one cut out by ψ_n,
so Φ^{C_n} = k[t]/(ψ_n(t)) with the finitely many t^k - 1 inverted.

Functions Overview
------------------
- CyclicFixedPoints: reduce / is_zero / equal_fractions / describe
- cyclic_fixed_points_mult(n, ring)
- composite_kills(X, n, x, bound): x ∈ X(T) dies in Φ^{C_n}(X).
- psi_kernel_check(X, n, bound)
- fixed_point_image(X, n, x)
"""

# Standard library imports
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Tuple

# Third-party library imports
from sympy import Poly, Symbol

# Local application/library specific imports
from ..exceptions import DimensionMismatch, GroupSyntaxError, PsiUnavailable
from ..groups import Character, cyclic, hom_from_rows
from ..kernel import CoefficientRing, LaurentPoly, RingKind
from ..laws import GlobalLaw, LawElement, MultiplicativeLaw, multiplicative_law
from ..regularity import DEFAULT_BOUND, psi_table

logger = logging.getLogger(__name__)

_t = Symbol('t')


@dataclass(frozen=True)
class CyclicFixedPoints:
    """k[t]/(relation) with the listed elements inverted.

    Parameters
    ----------
    n : int
    ring : CoefficientRing
    relation : LaurentPoly
        ψ_n as a polynomial in t with nonnegative exponents.
    inverted : tuple of LaurentPoly
        t^k - 1 for 0 < k < n, before reduction.
    """

    n: int
    ring: CoefficientRing
    relation: LaurentPoly
    inverted: Tuple[LaurentPoly, ...]

    def _poly(self, p: LaurentPoly) -> Poly:
        # t is a unit with t^n = 1, so exponents only matter modulo n
        folded = {}
        for (e,), c in p.terms.items():
            k = e % self.n
            folded[(k,)] = folded.get((k,), 0) + self.ring.to_sympy(c)
        return Poly.from_dict(folded or {(0,): 0}, _t, domain=self.ring.domain)

    def reduce(self, p: LaurentPoly) -> LaurentPoly:
        """Normal form of p (an element of k[t^±]) modulo ψ_n."""
        if p.nvars != 1:
            raise DimensionMismatch(f"fixed_points:CyclicFixedPoints.reduce:expected one variable, got {p.nvars}")
        remainder = self._poly(p).rem(self._poly(self.relation))
        return LaurentPoly(self.ring, 1, {exp: c for exp, c in remainder.terms()})

    def is_zero(self, p: LaurentPoly) -> bool:
        return self.reduce(p).is_zero()

    def equal_fractions(self, num_a: LaurentPoly, den_a: LaurentPoly, num_b: LaurentPoly, den_b: LaurentPoly) -> bool:
        """num_a/den_a = num_b/den_b; denominators must be products of inverted elements."""
        return self.is_zero(num_a * den_b - num_b * den_a)

    def inverted_images(self) -> List[LaurentPoly]:
        return [self.reduce(u) for u in self.inverted]

    def describe(self) -> str:
        body = f"{self.ring.label}[t] / ({self.relation.to_string(('t',))})"
        if self.inverted:
            body += ' with inverted ' + ', '.join(u.to_string(('t',)) for u in self.inverted)
        return body

    def to_json_dict(self) -> dict:
        return {
            'n': self.n,
            'ring': self.ring.label,
            'relation': self.relation.to_string(('t',)),
            'inverted': [u.to_string(('t',)) for u in self.inverted],
            'inverted_images': [u.to_string(('t',)) for u in self.inverted_images()],
        }


def _nonnegative(p: LaurentPoly) -> LaurentPoly:
    low = p.min_exponents()
    return p.shift([-v for v in low]) if low and low[0] < 0 else p


@lru_cache(maxsize=None)
def cyclic_fixed_points_mult(n: int, ring: Optional[CoefficientRing] = None) -> CyclicFixedPoints:
    """Φ^{C_n} of the multiplicative law.

    Raises
    ------
    GroupSyntaxError
        When n < 2.
    PsiUnavailable
        When the ring is not Z or Q (the quotient is then not a domain
        and the fraction tests are undecidable here).
    """
    n = int(n)
    if n < 2:
        raise GroupSyntaxError(f"fixed_points:cyclic_fixed_points_mult:need n >= 2, got {n}")
    ring = ring or CoefficientRing.integers()
    if ring.kind not in (RingKind.INTEGERS, RingKind.RATIONALS):
        raise PsiUnavailable(f"fixed_points:cyclic_fixed_points_mult:only Z and Q are supported, not {ring.label}")
    relation = _nonnegative(psi_table(multiplicative_law(ring), n)[n].payload)
    one = LaurentPoly.one(ring, 1)
    inverted = tuple(LaurentPoly.monomial(ring, 1, (k,)) - one for k in range(1, n))
    logger.debug(f"fixed_points:cyclic_fixed_points_mult:C{n} -> {relation}")
    return CyclicFixedPoints(n, ring, relation, inverted)


def composite_kills(law: GlobalLaw, n: int, x: LawElement, bound: int = DEFAULT_BOUND) -> bool:
    """Whether x ∈ X(T) maps to 0 in Φ^{C_n}(X).

    x dies exactly when e_n divides x·(e_1⋯e_{n-1})^m for some m; m is
    searched up to `bound` (at least 1).
    """
    circle = law.circle()
    if x.group != circle:
        raise DimensionMismatch(f"fixed_points:composite_kills:{x} does not live at {circle}")
    presentation = law.value(circle)
    e_n = law.euler_class(circle, Character((n,)))
    denominators = law.one(circle)
    for k in range(1, n):
        denominators = denominators * law.euler_class(circle, Character((k,)))
    candidate = x
    for _ in range(max(int(bound), 1) + 1):
        if presentation.divides(e_n.payload, candidate.payload):
            return True
        candidate = candidate * denominators
    return False


def _kernel_candidates(law: GlobalLaw, psi_n: LawElement, bound: int) -> List[LawElement]:
    circle = law.circle()
    candidates = []
    for m in law.value(circle).monomials(bound):
        u = law.element(circle, m)
        candidates.extend([u, u * psi_n, u - 1, u + 1])
    return candidates


def psi_kernel_mismatches(law: GlobalLaw, n: int, bound: int = DEFAULT_BOUND) -> List[LawElement]:
    """Candidates where "dies in Φ^{C_n}" and "divisible by ψ_n" disagree."""
    table = psi_table(law, n)
    psi_n = table[n]
    presentation = law.value(law.circle())
    mismatches = []
    for x in _kernel_candidates(law, psi_n, bound):
        killed = composite_kills(law, n, x, bound)
        divisible = presentation.divides(psi_n.payload, x.payload)
        if killed != divisible:
            logger.info(f"fixed_points:psi_kernel_check:{x} killed={killed}, ψ_{n} | x is {divisible}")
            mismatches.append(x)
    return mismatches


def psi_kernel_check(law: GlobalLaw, n: int, bound: int = DEFAULT_BOUND) -> bool:
    """(ψ_n) is the kernel of X(T) → Φ^{C_n}(X) on monomial-bounded elements.

    Raises
    ------
    PsiUnavailable
        When ψ_n cannot be computed for this law.
    """
    return not psi_kernel_mismatches(law, n, bound)


def fixed_point_image(law: MultiplicativeLaw, n: int, x: LawElement) -> LaurentPoly:
    """Image of x ∈ X(T) in Φ^{C_n}, through the restriction to X(C_n)."""
    if not isinstance(law, MultiplicativeLaw):
        raise PsiUnavailable(f"fixed_points:fixed_point_image:{law.law_id} is not the multiplicative law")
    group = cyclic(n)
    restricted = law.restrict(hom_from_rows(group, law.circle(), [[1]]), x)
    return cyclic_fixed_points_mult(n, law.ring).reduce(restricted.payload)
