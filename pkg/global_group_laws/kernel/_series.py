"""
Global Group Laws: Truncated Series Module

Multivariate power series truncated at a total-degree bound. A series is
a nonnegative `LaurentPoly` together with the bound `trunc`; every stored
term has total degree < trunc.

Functions Overview
------------------
- TruncatedSeries: +, -, *, ** , compose, inverse, revert, truncate, embed.
- series_names(nvars): default variable names x, y, z, then x1..xn.
"""

# Standard library imports
import logging
from typing import Dict, List, Sequence, Tuple

# Local application/library specific imports
from ..exceptions import CompositionError, DimensionMismatch, NotAUnit, RingMismatch
from ._laurent import LaurentPoly
from ._rings import CoefficientRing

logger = logging.getLogger(__name__)

SERIES_NAMES = ('x', 'y', 'z')


def series_names(nvars: int) -> Tuple[str, ...]:
    if nvars <= len(SERIES_NAMES):
        return SERIES_NAMES[:nvars]
    return tuple(f"x{i + 1}" for i in range(nvars))


class TruncatedSeries:
    """Power series in `nvars` variables modulo total degree `trunc`."""

    __slots__ = ('poly', 'trunc')

    def __init__(self, poly: LaurentPoly, trunc: int):
        if not poly.is_polynomial():
            raise DimensionMismatch(f"kernel:TruncatedSeries:{poly} has negative exponents")
        self.trunc = int(trunc)
        self.poly = poly.truncate(self.trunc)

    # region constructors
    @classmethod
    def zero(cls, ring: CoefficientRing, nvars: int, trunc: int) -> 'TruncatedSeries':
        return cls(LaurentPoly.zero(ring, nvars), trunc)

    @classmethod
    def constant(cls, ring, nvars, trunc, c) -> 'TruncatedSeries':
        return cls(LaurentPoly.constant(ring, nvars, c), trunc)

    @classmethod
    def one(cls, ring, nvars, trunc) -> 'TruncatedSeries':
        return cls.constant(ring, nvars, trunc, 1)

    @classmethod
    def variable(cls, ring, nvars, trunc, index) -> 'TruncatedSeries':
        """x_index in k[[x_0, ..., x_{nvars-1}]] modulo degree trunc."""
        return cls(LaurentPoly.variable(ring, nvars, index), trunc)

    @classmethod
    def from_coefficients(cls, ring, trunc, coefficients: Sequence) -> 'TruncatedSeries':
        """One-variable series Σ coefficients[k]·x^k."""
        return cls(LaurentPoly(ring, 1, {(k,): c for k, c in enumerate(coefficients)}), trunc)
    # endregion

    @property
    def ring(self) -> CoefficientRing:
        return self.poly.ring

    @property
    def nvars(self) -> int:
        return self.poly.nvars

    def coefficient(self, exp: Sequence[int]):
        return self.poly.coefficient(exp)

    def constant_term(self):
        return self.poly.constant_term()

    def order(self) -> int:
        return self.poly.order()

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    # region arithmetic
    def _match(self, other) -> 'TruncatedSeries':
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries.constant(self.ring, self.nvars, self.trunc, other)
        if other.ring != self.ring or other.nvars != self.nvars:
            raise RingMismatch(
                f"kernel:TruncatedSeries:operands over {self.ring.label}/{self.nvars} "
                f"and {other.ring.label}/{other.nvars}")
        return other

    def __add__(self, other) -> 'TruncatedSeries':
        other = self._match(other)
        return TruncatedSeries(self.poly + other.poly, min(self.trunc, other.trunc))

    __radd__ = __add__

    def __neg__(self) -> 'TruncatedSeries':
        return TruncatedSeries(-self.poly, self.trunc)

    def __sub__(self, other) -> 'TruncatedSeries':
        other = self._match(other)
        return TruncatedSeries(self.poly - other.poly, min(self.trunc, other.trunc))

    def __rsub__(self, other) -> 'TruncatedSeries':
        return self._match(other) - self

    def __mul__(self, other) -> 'TruncatedSeries':
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries(self.poly.scale(other), self.trunc)
        other = self._match(other)
        trunc = min(self.trunc, other.trunc)
        return TruncatedSeries((self.poly.truncate(trunc) * other.poly.truncate(trunc)), trunc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> 'TruncatedSeries':
        if k < 0:
            return self.inverse() ** (-k)
        result = TruncatedSeries.one(self.ring, self.nvars, self.trunc)
        for _ in range(int(k)):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        trunc = min(self.trunc, other.trunc)
        return self.poly.truncate(trunc) == other.poly.truncate(trunc)

    def __hash__(self):
        return hash((self.poly, self.trunc))
    # endregion

    # region series operations
    def truncate(self, trunc: int) -> 'TruncatedSeries':
        """
        Lower the precision to trunc.

        A bound above the current one is ignored, since the dropped terms
        are not known.
        """
        return TruncatedSeries(self.poly, min(trunc, self.trunc))

    def with_trunc(self, trunc: int) -> 'TruncatedSeries':
        """
        Reinterpret the stored terms with a different bound.

        Unlike `truncate` this may raise the bound. The caller asserts the
        series has no terms in the gained degrees, as with a polynomial
        read as a series.

        Parameters
        ----------
        trunc : int
            The new precision; terms of degree >= trunc are dropped.

        Returns
        -------
        TruncatedSeries
        """
        return TruncatedSeries(self.poly, trunc)

    def embed(self, nvars: int, positions: Sequence[int]) -> 'TruncatedSeries':
        """
        Rename variable i to variable positions[i] of an nvars-variable ring.

        Parameters
        ----------
        nvars : int
            Variable count of the target ring.
        positions : sequence of int
            One distinct position per variable of this series.

        Returns
        -------
        TruncatedSeries
            Same precision, so F(x, y) embeds as F(x_0, x_2) for positions (0, 2).
        """
        images = []
        for pos in positions:
            row = [0] * nvars
            row[pos] = 1
            images.append(row)
        return TruncatedSeries(self.poly.substitute(images, nvars), self.trunc)

    def compose(self, args: Sequence['TruncatedSeries']) -> 'TruncatedSeries':
        """Substitute args[i] for variable i.

        Raises
        ------
        CompositionError
            When an argument has a nonzero constant term.
        """
        if len(args) != self.nvars:
            raise DimensionMismatch(
                f"kernel:TruncatedSeries.compose:{len(args)} arguments for {self.nvars} variables")
        for i, arg in enumerate(args):
            if arg.constant_term():
                raise CompositionError(
                    f"kernel:TruncatedSeries.compose:argument {i} has nonzero constant term")
        if not args:
            return self
        target = args[0]
        trunc = min([self.trunc] + [a.trunc for a in args])
        powers: Dict[Tuple[int, int], TruncatedSeries] = {}

        def _power(i, e):
            if (i, e) not in powers:
                powers[(i, e)] = args[i].truncate(trunc) if e == 1 else _power(i, e - 1) * args[i].truncate(trunc)
            return powers[(i, e)]

        result = TruncatedSeries.zero(target.ring, target.nvars, trunc)
        for exp, c in self.poly.terms.items():
            if sum(exp) >= trunc:
                continue
            term = TruncatedSeries.constant(target.ring, target.nvars, trunc, c)
            for i, e in enumerate(exp):
                if e:
                    term = term * _power(i, e)
            result = result + term
        return result

    def inverse(self) -> 'TruncatedSeries':
        """
        Multiplicative inverse, by the geometric series in 1 - f/c0.

        Raises
        ------
        NotAUnit
            When the constant term c0 is not a unit of the ring.
        """
        c0 = self.constant_term()
        if not self.ring.is_unit(c0):
            raise NotAUnit(f"kernel:TruncatedSeries.inverse:constant term of {self} is not a unit")
        c0_inv = self.ring.inverse(c0)
        u = TruncatedSeries.one(self.ring, self.nvars, self.trunc) - self * c0_inv
        result = TruncatedSeries.one(self.ring, self.nvars, self.trunc)
        power = TruncatedSeries.one(self.ring, self.nvars, self.trunc)
        for _ in range(1, self.trunc):
            power = power * u
            if power.is_zero():
                break
            result = result + power
        return result * c0_inv

    def revert(self) -> 'TruncatedSeries':
        """
        Compositional inverse g with f(g(x)) = x + O(trunc).

        Raises
        ------
        DimensionMismatch
            For series in more than one variable.
        CompositionError
            When f has a constant term or a1 is not a unit.
        """
        if self.nvars != 1:
            raise DimensionMismatch("kernel:TruncatedSeries.revert:only one-variable series can be reverted")
        if self.constant_term():
            raise CompositionError("kernel:TruncatedSeries.revert:series has a nonzero constant term")
        a1 = self.coefficient((1,))
        if not self.ring.is_unit(a1):
            raise NotAUnit(f"kernel:TruncatedSeries.revert:linear coefficient of {self} is not a unit")
        a1_inv = self.ring.inverse(a1)
        x = TruncatedSeries.variable(self.ring, 1, self.trunc, 0)
        g = x * a1_inv
        # each step fixes at least one more degree
        for _ in range(self.trunc):
            defect = self.compose([g]) - x
            if defect.is_zero():
                break
            g = g - defect * a1_inv
        return g

    def univariate_coefficients(self) -> List:
        if self.nvars != 1:
            raise DimensionMismatch("kernel:TruncatedSeries:not a one-variable series")
        return [self.coefficient((k,)) for k in range(self.trunc)]
    # endregion

    def to_string(self, names: Sequence[str] = None) -> str:
        names = names or series_names(self.nvars)
        text = self.poly.to_string(names)
        return f"{text} + O({self.trunc})" if text != '0' else f"O({self.trunc})"

    def __str__(self):
        return self.poly.to_string(series_names(self.nvars))

    def __repr__(self):
        return f"TruncatedSeries('{self}', trunc={self.trunc})"

    def to_json_dict(self) -> dict:
        payload = self.poly.to_json_dict()
        payload['trunc'] = self.trunc
        return payload
