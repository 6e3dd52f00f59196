"""
Global Group Laws: Laurent Polynomial Module

Exact sparse multivariate Laurent polynomials over a `CoefficientRing`.
A polynomial is an immutable map from signed exponent vectors to nonzero
coefficients. Multiplication and division are delegated to sympy's sparse
polynomial rings after shifting every operand into the polynomial range;
substitution along monomial maps is plain integer linear algebra on the
exponent vectors.

Functions Overview
------------------
- LaurentPoly: arithmetic (+, -, *, **), substitute, evaluate,
  exact_divide, canonical printing and JSON conversion.
- poly_ring(ring, nvars): the cached sympy ring used for products.

Terms are always reported in graded lexicographic order, largest first.
"""

# Standard library imports
from functools import lru_cache
from types import MappingProxyType
from typing import Dict, List, Mapping, Sequence, Tuple

# Third-party library imports
import numpy as np
from sympy.polys.orderings import grlex
from sympy.polys.rings import ring as sparse_ring

# Local application/library specific imports
from ..exceptions import DimensionMismatch, NotAUnit, NotDivisible, RingMismatch
from ._rings import CoefficientRing

Exponent = Tuple[int, ...]


@lru_cache(maxsize=None)
def poly_ring(ring: CoefficientRing, nvars: int):
    """Sparse sympy polynomial ring on `nvars` generators (nvars >= 1)."""
    names = ','.join(f"_z{i}" for i in range(nvars))
    return sparse_ring(names, ring.domain, grlex)[0]


def monomial_string(exp: Exponent, names: Sequence[str]) -> str:
    factors = []
    for name, e in zip(names, exp):
        if e == 0:
            continue
        factors.append(name if e == 1 else f"{name}^{e}")
    return '*'.join(factors)


class LaurentPoly:
    """Immutable sparse Laurent polynomial.

    Parameters
    ----------
    ring : CoefficientRing
        Coefficient ring.
    nvars : int
        Number of variables.
    terms : mapping, optional
        Exponent vector → coefficient. Coefficients are converted into the
        ring and zeros are dropped.
    """

    __slots__ = ('ring', 'nvars', '_terms', '_hash')

    def __init__(self, ring: CoefficientRing, nvars: int, terms: Mapping = None):
        self.ring = ring
        self.nvars = int(nvars)
        clean: Dict[Exponent, object] = {}
        if terms:
            zero = ring.zero
            for exp, coef in terms.items():
                exp = tuple(int(e) for e in exp)
                if len(exp) != self.nvars:
                    raise DimensionMismatch(
                        f"kernel:LaurentPoly:exponent {exp} does not have length {self.nvars}")
                c = ring.convert(coef)
                if c != zero:
                    clean[exp] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ring, nvars, terms: Dict[Exponent, object]) -> 'LaurentPoly':
        # terms already converted and free of zeros
        obj = cls.__new__(cls)
        obj.ring = ring
        obj.nvars = nvars
        obj._terms = terms
        obj._hash = None
        return obj

    # region constructors
    @classmethod
    def zero(cls, ring, nvars) -> 'LaurentPoly':
        return cls._raw(ring, nvars, {})

    @classmethod
    def constant(cls, ring, nvars, c) -> 'LaurentPoly':
        return cls(ring, nvars, {(0,) * nvars: c})

    @classmethod
    def one(cls, ring, nvars) -> 'LaurentPoly':
        return cls.constant(ring, nvars, 1)

    @classmethod
    def monomial(cls, ring, nvars, exp: Sequence[int], coef=1) -> 'LaurentPoly':
        return cls(ring, nvars, {tuple(exp): coef})

    @classmethod
    def variable(cls, ring, nvars, index: int) -> 'LaurentPoly':
        exp = [0] * nvars
        exp[index] = 1
        return cls.monomial(ring, nvars, exp)
    # endregion

    # region accessors
    @property
    def terms(self) -> Mapping[Exponent, object]:
        return MappingProxyType(self._terms)

    def coefficient(self, exp: Sequence[int]):
        return self._terms.get(tuple(exp), self.ring.zero)

    def constant_term(self):
        return self.coefficient((0,) * self.nvars)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(exp) for exp in self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_polynomial(self) -> bool:
        return all(e >= 0 for exp in self._terms for e in exp)

    def min_exponents(self) -> Exponent:
        if not self._terms:
            return (0,) * self.nvars
        return tuple(min(col) for col in zip(*self._terms))

    def total_degree(self) -> int:
        return max((sum(exp) for exp in self._terms), default=-1)

    def order(self) -> int:
        """Smallest total degree of a term (-1 for the zero polynomial)."""
        return min((sum(exp) for exp in self._terms), default=-1)

    def degree_in(self, index: int) -> Tuple[int, int]:
        """(min, max) exponent of one variable over the support."""
        values = [exp[index] for exp in self._terms] or [0]
        return min(values), max(values)

    def sorted_terms(self) -> List[Tuple[Exponent, object]]:
        """Terms in canonical order: graded lexicographic, largest first."""
        return sorted(self._terms.items(), key=lambda item: grlex(item[0]), reverse=True)
    # endregion

    # region arithmetic
    def _check(self, other: 'LaurentPoly'):
        if not isinstance(other, LaurentPoly):
            raise TypeError(f"kernel:LaurentPoly:cannot combine with {type(other).__name__}")
        if other.ring != self.ring or other.nvars != self.nvars:
            raise RingMismatch(
                f"kernel:LaurentPoly:operands over {self.ring.label}/{self.nvars} "
                f"and {other.ring.label}/{other.nvars}")

    def _coerce(self, other) -> 'LaurentPoly':
        if isinstance(other, LaurentPoly):
            self._check(other)
            return other
        return LaurentPoly.constant(self.ring, self.nvars, other)

    def __add__(self, other) -> 'LaurentPoly':
        other = self._coerce(other)
        terms = dict(self._terms)
        zero = self.ring.zero
        for exp, c in other._terms.items():
            s = terms.get(exp, zero) + c
            if s != zero:
                terms[exp] = s
            else:
                terms.pop(exp, None)
        return LaurentPoly._raw(self.ring, self.nvars, terms)

    __radd__ = __add__

    def __neg__(self) -> 'LaurentPoly':
        return LaurentPoly._raw(self.ring, self.nvars, {exp: -c for exp, c in self._terms.items()})

    def __sub__(self, other) -> 'LaurentPoly':
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> 'LaurentPoly':
        return self._coerce(other) - self

    def scale(self, c) -> 'LaurentPoly':
        c = self.ring.convert(c)
        if not c:
            return LaurentPoly.zero(self.ring, self.nvars)
        terms = {}
        for exp, a in self._terms.items():
            b = a * c
            if b:
                terms[exp] = b
        return LaurentPoly._raw(self.ring, self.nvars, terms)

    def shift(self, vector: Sequence[int]) -> 'LaurentPoly':
        """Multiply by the monomial with exponent `vector`."""
        vector = tuple(vector)
        return LaurentPoly._raw(
            self.ring, self.nvars,
            {tuple(a + b for a, b in zip(exp, vector)): c for exp, c in self._terms.items()})

    def _lift(self):
        low = self.min_exponents()
        R = poly_ring(self.ring, self.nvars)
        element = R.from_dict({tuple(a - b for a, b in zip(exp, low)): c for exp, c in self._terms.items()})
        return low, element

    def _from_element(self, element, low) -> 'LaurentPoly':
        return LaurentPoly._raw(
            self.ring, self.nvars,
            {tuple(a + b for a, b in zip(exp, low)): c for exp, c in element.items() if c})

    def __mul__(self, other) -> 'LaurentPoly':
        if not isinstance(other, LaurentPoly):
            return self.scale(other)
        self._check(other)
        if not self._terms or not other._terms:
            return LaurentPoly.zero(self.ring, self.nvars)
        if self.nvars == 0:
            return LaurentPoly.constant(self.ring, 0, self.constant_term() * other.constant_term())
        if len(other._terms) == 1:
            (exp, c), = other._terms.items()
            return self.scale(c).shift(exp)
        if len(self._terms) == 1:
            (exp, c), = self._terms.items()
            return other.scale(c).shift(exp)
        low_a, a = self._lift()
        low_b, b = other._lift()
        return self._from_element(a * b, tuple(x + y for x, y in zip(low_a, low_b)))

    __rmul__ = __mul__

    def inverse(self) -> 'LaurentPoly':
        """Inverse of a monomial with unit coefficient."""
        if len(self._terms) != 1:
            raise NotAUnit(f"kernel:LaurentPoly.inverse:{self} is not a unit of the Laurent ring")
        (exp, c), = self._terms.items()
        return LaurentPoly._raw(self.ring, self.nvars, {tuple(-e for e in exp): self.ring.inverse(c)})

    def __pow__(self, k: int) -> 'LaurentPoly':
        k = int(k)
        if k < 0:
            return self.inverse() ** (-k)
        result = LaurentPoly.one(self.ring, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def exact_divide(self, den: 'LaurentPoly') -> 'LaurentPoly':
        """Exact quotient self / den in the Laurent ring.

        Both operands are shifted into the polynomial range (the
        denominator by its minimal exponent vector) and divided by
        graded-lexicographic leading terms.

        Raises
        ------
        NotDivisible
            When den is zero or no exact quotient exists.
        """
        self._check(den)
        if den.is_zero():
            raise NotDivisible("kernel:LaurentPoly.exact_divide:division by zero")
        if self.is_zero():
            return LaurentPoly.zero(self.ring, self.nvars)
        if self.nvars == 0:
            q = self.ring.exact_quotient(self.constant_term(), den.constant_term())
            if q is None:
                raise NotDivisible(f"kernel:LaurentPoly.exact_divide:{self} is not divisible by {den}")
            return LaurentPoly.constant(self.ring, 0, q)
        low_n, n = self._lift()
        low_d, d = den._lift()
        q, r = n.div(d)
        if r:
            raise NotDivisible(f"kernel:LaurentPoly.exact_divide:{self} is not divisible by {den}")
        return self._from_element(q, tuple(a - b for a, b in zip(low_n, low_d)))

    def divides(self, other: 'LaurentPoly') -> bool:
        try:
            other.exact_divide(self)
        except NotDivisible:
            return False
        return True
    # endregion

    # region substitution
    def substitute(self, images: Sequence[Sequence[int]], target_nvars: int) -> 'LaurentPoly':
        """Pull back along a monomial map.

        Parameters
        ----------
        images : sequence of exponent vectors
            images[i] is the exponent vector (length target_nvars) of the
            monomial that variable i is sent to.
        target_nvars : int
            Number of variables of the result.
        """
        if len(images) != self.nvars:
            raise DimensionMismatch(
                f"kernel:LaurentPoly.substitute:{len(images)} images for {self.nvars} variables")
        if not self._terms:
            return LaurentPoly.zero(self.ring, target_nvars)
        image = np.array([list(v) for v in images], dtype=object).reshape(self.nvars, target_nvars)
        if any(len(v) != target_nvars for v in images):
            raise DimensionMismatch("kernel:LaurentPoly.substitute:image length differs from target_nvars")
        exps = list(self._terms)
        new_exps = np.array(exps, dtype=object).reshape(len(exps), self.nvars).dot(image) if self.nvars \
            else np.zeros((len(exps), target_nvars), dtype=object)
        terms: Dict[Exponent, object] = {}
        zero = self.ring.zero
        for row, exp in zip(new_exps, exps):
            key = tuple(int(e) for e in row)
            s = terms.get(key, zero) + self._terms[exp]
            if s != zero:
                terms[key] = s
            else:
                terms.pop(key, None)
        return LaurentPoly._raw(self.ring, target_nvars, terms)

    def evaluate(self, images: Sequence['LaurentPoly']) -> 'LaurentPoly':
        """Ring homomorphism sending variable i to images[i].

        Negative exponents require the corresponding image to be a unit
        (a monomial with unit coefficient)."""
        if len(images) != self.nvars:
            raise DimensionMismatch(
                f"kernel:LaurentPoly.evaluate:{len(images)} images for {self.nvars} variables")
        if not images:
            return self
        target = images[0]
        result = LaurentPoly.zero(target.ring, target.nvars)
        powers: Dict[Tuple[int, int], LaurentPoly] = {}

        def _power(i, e):
            if (i, e) not in powers:
                powers[(i, e)] = images[i] ** e
            return powers[(i, e)]

        for exp, c in self._terms.items():
            term = LaurentPoly.constant(target.ring, target.nvars, target.ring.convert(self.ring.to_sympy(c)))
            for i, e in enumerate(exp):
                if e:
                    term = term * _power(i, e)
            result = result + term
        return result

    def map_coefficients(self, ring: CoefficientRing, fn) -> 'LaurentPoly':
        return LaurentPoly(ring, self.nvars, {exp: fn(c) for exp, c in self._terms.items()})

    def truncate(self, bound: int) -> 'LaurentPoly':
        """Drop every term of total degree >= bound."""
        return LaurentPoly._raw(
            self.ring, self.nvars, {exp: c for exp, c in self._terms.items() if sum(exp) < bound})
    # endregion

    # region comparison and output
    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self.ring == other.ring and self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, int):
            return self == LaurentPoly.constant(self.ring, self.nvars, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self.nvars, frozenset(self._terms.items())))
        return self._hash

    def default_names(self) -> Tuple[str, ...]:
        if self.nvars == 1:
            return ('t',)
        return tuple(f"t{i + 1}" for i in range(self.nvars))

    def to_string(self, names: Sequence[str] = None) -> str:
        """Canonical text, e.g. 't^2 - t + 1' or '2*e1 - 3*e2'."""
        names = names or self.default_names()
        if not self._terms:
            return '0'
        pieces = []
        for exp, c in self.sorted_terms():
            coef = self.ring.to_string(c)
            mono = monomial_string(exp, names)
            negative = coef.startswith('-') and ' ' not in coef
            if negative:
                coef = coef[1:]
            if ' ' in coef or (mono and '+' in coef):
                coef = f"({coef})"
            if not mono:
                body = coef
            elif coef == '1':
                body = mono
            else:
                body = f"{coef}*{mono}"
            pieces.append((negative, body))
        first_negative, first = pieces[0]
        text = ('-' if first_negative else '') + first
        for negative, body in pieces[1:]:
            text += (' - ' if negative else ' + ') + body
        return text

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"LaurentPoly({self.ring.label}, {self.nvars}, '{self}')"

    def to_json_dict(self) -> dict:
        return {
            'ring': self.ring.label,
            'nvars': self.nvars,
            'terms': [{'exp': list(exp), 'coef': self.ring.to_string(c)} for exp, c in self.sorted_terms()],
        }

    @classmethod
    def from_json_dict(cls, payload: dict) -> 'LaurentPoly':
        ring = CoefficientRing.parse(payload['ring'])
        return cls(ring, payload['nvars'], {tuple(t['exp']): t['coef'] for t in payload['terms']})
    # endregion
