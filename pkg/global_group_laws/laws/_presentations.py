"""
Global Group Laws: Ring Presentations Module

Every value X(A) of an implemented law is a quotient of a Laurent,
polynomial or truncated power series ring by relations of a very
particular shape. Each shape gets its own exact normal form:

- LaurentPresentation: k[Z^r / L], the group ring of a character group.
  Exponent vectors are reduced modulo the Hermite form of L.
- PolynomialPresentation: k[e_1..e_r] / (linear forms). A Smith form
  change of variables turns the relations into d_i·f_i, so a term's
  coefficient is reduced modulo the gcd of the d_i on its support.
- TruncatedPresentation: k[x_1..x_r] / (degree >= N, relations). The
  monomials below N form a finite module; relation multiples are
  row-reduced once and cached.

Functions Overview
------------------
- Presentation.reduce / divide / is_unit / is_domain / monomials / describe
"""

# Standard library imports
import itertools
import logging
import threading
from abc import ABC, abstractmethod
from functools import cached_property
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

# Third-party library imports
from sympy.polys.orderings import grlex

# Local application/library specific imports
from ..exceptions import NotAUnit, NotDivisible, RingMismatch
from ..kernel import (
    CoefficientRing,
    LaurentPoly,
    TruncatedSeries,
    field_rref,
    field_solve,
    hermite_rows,
    integer_solve,
    reduce_by_hermite,
    smith_diagonal,
    smith_with_transforms,
    unimodular_inverse,
)

logger = logging.getLogger(__name__)

# cap on the unknowns of a fallback division system
_MAX_UNKNOWNS = 4000


def default_names(prefix: str, nvars: int) -> Tuple[str, ...]:
    if nvars == 1:
        return (prefix,)
    return tuple(f"{prefix}{i + 1}" for i in range(nvars))


def _box(low: Sequence[int], high: Sequence[int]):
    return itertools.product(*[range(a, b + 1) for a, b in zip(low, high)])


def _graded(nvars: int, max_degree: int, min_degree: int = 0):
    """Nonnegative exponent vectors with min_degree <= total degree <= max_degree, ascending grlex."""
    exps = [e for e in itertools.product(range(max_degree + 1), repeat=nvars)
            if min_degree <= sum(e) <= max_degree]
    return sorted(exps, key=grlex)


class Presentation(ABC):
    """A finitely presented commutative ring with exact normal forms."""

    def __init__(self, ring: CoefficientRing, nvars: int, names: Sequence[str]):
        self.ring = ring
        self.nvars = nvars
        self.names = tuple(names)

    # region interface
    @abstractmethod
    def reduce(self, p: LaurentPoly) -> LaurentPoly:
        """Canonical representative of p."""

    @abstractmethod
    def relations(self) -> List[LaurentPoly]:
        """Ideal generators (for display and membership systems)."""

    @abstractmethod
    def is_domain(self) -> bool:
        """True when the ring is known to be an integral domain."""

    @abstractmethod
    def monomials(self, bound: int) -> List[LaurentPoly]:
        """Search candidates: nonzero reduced monomials up to `bound`, positive degree first."""

    @abstractmethod
    def is_unit(self, p: LaurentPoly) -> bool:
        """True when p is a unit that this presentation can recognise."""

    @abstractmethod
    def inverse(self, p: LaurentPoly) -> LaurentPoly:
        """Inverse of a recognised unit."""

    @abstractmethod
    def _divide(self, num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
        """Quotient of reduced operands or NotDivisible."""
    # endregion

    def _check(self, p: LaurentPoly):
        if p.ring != self.ring or p.nvars != self.nvars:
            raise RingMismatch(
                f"laws:Presentation:element over {p.ring.label}/{p.nvars} used in {self.describe()}")

    def zero(self) -> LaurentPoly:
        return LaurentPoly.zero(self.ring, self.nvars)

    def one(self) -> LaurentPoly:
        return self.reduce(LaurentPoly.one(self.ring, self.nvars))

    def variable(self, index: int) -> LaurentPoly:
        return self.reduce(LaurentPoly.variable(self.ring, self.nvars, index))

    def is_zero(self, p: LaurentPoly) -> bool:
        return self.reduce(p).is_zero()

    def equal(self, a: LaurentPoly, b: LaurentPoly) -> bool:
        return self.reduce(a - b).is_zero()

    def mul(self, a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
        return self.reduce(a * b)

    def divide(self, num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
        """Exact quotient num / den in this ring.

        Raises
        ------
        NotDivisible
            When den is zero here or no quotient exists (within the search
            limits of presentations without a direct algorithm).
        """
        self._check(num)
        self._check(den)
        num, den = self.reduce(num), self.reduce(den)
        if den.is_zero():
            raise NotDivisible(f"laws:Presentation.divide:division by zero in {self.describe()}")
        if num.is_zero():
            return num
        return self.reduce(self._divide(num, den))

    def divides(self, den: LaurentPoly, num: LaurentPoly) -> bool:
        try:
            self.divide(num, den)
        except NotDivisible:
            return False
        return True

    def to_string(self, p: LaurentPoly) -> str:
        return p.to_string(self.names)

    def describe(self) -> str:
        gens = ', '.join(self.names) or '-'
        rels = self.relations()
        body = f"{self.ring.label}[{gens}]"
        if rels:
            body += ' / (' + ', '.join(self.to_string(r) for r in rels) + ')'
        return body

    # region shared division helpers
    def _synthetic_divide(self, num: LaurentPoly, den: LaurentPoly, var: int) -> Optional[LaurentPoly]:
        """Divide by den = x^s·(A·x + B) along a free variable x; None when den has another shape."""
        low, high = den.degree_in(var)
        if high - low != 1:
            return None
        shift = [0] * self.nvars
        shift[var] = -low
        den0 = den.shift(shift)
        A, B = _split_linear(den0, var)
        if self.is_unit(A):
            top_down = True
        elif self.is_unit(B):
            top_down = False
        else:
            return None
        num0 = num.shift(shift)
        coeffs = _coefficients_in(num0, var)
        kmin, kmax = min(coeffs), max(coeffs)
        zero = self.zero()
        quotient: Dict[int, LaurentPoly] = {}
        if top_down:
            a_inv = self.inverse(A)
            carry = coeffs.get(kmax, zero)
            for k in range(kmax, kmin, -1):
                q = self.reduce(a_inv * carry)
                quotient[k - 1] = q
                carry = coeffs.get(k - 1, zero) - B * q
            residual = self.reduce(carry)
        else:
            b_inv = self.inverse(B)
            carry = coeffs.get(kmin, zero)
            for k in range(kmin, kmax):
                q = self.reduce(b_inv * carry)
                quotient[k] = q
                carry = coeffs.get(k + 1, zero) - A * q
            residual = self.reduce(carry)
        if not residual.is_zero():
            raise NotDivisible(
                f"laws:Presentation.divide:{self.to_string(num)} is not divisible by {self.to_string(den)}")
        result = zero
        for k, q in quotient.items():
            mono = [0] * self.nvars
            mono[var] = k
            result = result + q.shift(mono)
        return result

    def _linear_divide(self, num: LaurentPoly, den: LaurentPoly, candidates: Sequence[LaurentPoly],
                       multiples: Sequence[LaurentPoly], trunc: Optional[int] = None) -> LaurentPoly:
        """Solve num = Σ x_m·m·den + Σ y_g·g over the coefficient ring."""
        columns = [m * den for m in candidates] + list(multiples)
        if trunc is not None:
            columns = [c.truncate(trunc) for c in columns]
            num = num.truncate(trunc)
        return self._solve(num, columns, candidates)

    def _solve(self, num: LaurentPoly, columns: Sequence[LaurentPoly], candidates: Sequence[LaurentPoly]) -> LaurentPoly:
        """Find x with num = Σ x_j·columns[j]; return Σ x_j·candidates[j] over the leading columns."""
        if len(columns) > _MAX_UNKNOWNS:
            raise NotDivisible(f"laws:Presentation.divide:division system too large ({len(columns)} unknowns)")
        columns = list(columns)
        index: Dict[Tuple[int, ...], int] = {}
        for c in columns + [num]:
            for exp in c.terms:
                index.setdefault(exp, len(index))
        rows = [[self.ring.zero] * len(columns) for _ in index]
        for j, c in enumerate(columns):
            for exp, coef in c.terms.items():
                rows[index[exp]][j] = coef
        rhs = [self.ring.zero] * len(index)
        for exp, coef in num.terms.items():
            rhs[index[exp]] = coef
        if self.ring.is_field:
            solution = field_solve(rows, len(columns), rhs, self.ring.domain)
        else:
            solution = integer_solve([[int(v) for v in row] for row in rows], len(columns), [int(v) for v in rhs])
        if solution is None:
            raise NotDivisible(
                f"laws:Presentation.divide:{self.to_string(num)} is not in the span of the division system")
        result = self.zero()
        for x, m in zip(solution, candidates):
            if x:
                result = result + m.scale(x)
        return result
    # endregion


def _split_linear(den: LaurentPoly, var: int) -> Tuple[LaurentPoly, LaurentPoly]:
    """den = A·x + B with A, B free of x (x-degrees 0 and 1)."""
    A, B = {}, {}
    for exp, c in den.terms.items():
        if exp[var] == 1:
            e = list(exp)
            e[var] = 0
            A[tuple(e)] = c
        else:
            B[exp] = c
    return LaurentPoly(den.ring, den.nvars, A), LaurentPoly(den.ring, den.nvars, B)


def _coefficients_in(p: LaurentPoly, var: int) -> Dict[int, LaurentPoly]:
    groups: Dict[int, Dict] = {}
    for exp, c in p.terms.items():
        e = list(exp)
        k = e[var]
        e[var] = 0
        groups.setdefault(k, {})[tuple(e)] = c
    return {k: LaurentPoly(p.ring, p.nvars, t) for k, t in groups.items()}


# region group rings
class LaurentPresentation(Presentation):
    """k[Z^r / L] for the lattice L spanned by `lattice` rows."""

    def __init__(self, ring: CoefficientRing, nvars: int, lattice: Sequence[Sequence[int]] = (),
                 names: Sequence[str] = None):
        super().__init__(ring, nvars, names or default_names('t', nvars))
        self.lattice = tuple(tuple(int(v) for v in row) for row in lattice)
        self.hnf = hermite_rows(self.lattice, nvars)
        self._free = [j for j in range(nvars) if all(row[j] == 0 for row in self.hnf)]

    def reduce(self, p: LaurentPoly) -> LaurentPoly:
        self._check(p)
        if not self.hnf:
            return p
        terms: Dict = {}
        zero = self.ring.zero
        for exp, c in p.terms.items():
            key = reduce_by_hermite(exp, self.hnf)
            s = terms.get(key, zero) + c
            if s:
                terms[key] = s
            else:
                terms.pop(key, None)
        return LaurentPoly._raw(self.ring, self.nvars, terms)

    def relations(self) -> List[LaurentPoly]:
        one = LaurentPoly.one(self.ring, self.nvars)
        return [LaurentPoly.monomial(self.ring, self.nvars, row) - one for row in self.hnf]

    def torsion(self) -> List[int]:
        return [d for d in smith_diagonal(self.hnf, self.nvars) if d > 1]

    def is_domain(self) -> bool:
        return not self.torsion()

    def monomials(self, bound: int) -> List[LaurentPoly]:
        seen = set()
        exps = []
        for exp in _box([-bound] * self.nvars, [bound] * self.nvars):
            key = reduce_by_hermite(exp, self.hnf) if self.hnf else exp
            if key not in seen:
                seen.add(key)
                exps.append(key)
        exps.sort(key=lambda e: (sum(abs(v) for v in e) == 0, sum(abs(v) for v in e), tuple(-v for v in e)))
        return [LaurentPoly.monomial(self.ring, self.nvars, e) for e in exps]

    def is_unit(self, p: LaurentPoly) -> bool:
        p = self.reduce(p)
        return p.is_monomial() and self.ring.is_unit(next(iter(p.terms.values())))

    def inverse(self, p: LaurentPoly) -> LaurentPoly:
        p = self.reduce(p)
        if not self.is_unit(p):
            raise NotAUnit(f"laws:LaurentPresentation.inverse:{self.to_string(p)} is not a recognised unit")
        return self.reduce(p.inverse())

    def _divide(self, num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
        if not self.hnf:
            return num.exact_divide(den)
        if self.is_unit(den):
            return num * self.inverse(den)
        for var in self._free:
            quotient = self._synthetic_divide(num, den, var)
            if quotient is not None:
                return quotient
        low = [a - b - 1 for a, b in zip(num.min_exponents(), _max_exponents(den))]
        high = [a - b + 1 for a, b in zip(_max_exponents(num), den.min_exponents())]
        candidates = []
        seen = set()
        for exp in _box(low, high):
            key = reduce_by_hermite(exp, self.hnf)
            if key not in seen:
                seen.add(key)
                candidates.append(LaurentPoly.monomial(self.ring, self.nvars, key))
        # exponent reduction is coefficient-linear, so reduced coordinates can be solved directly
        return self._solve(num, [self.reduce(m * den) for m in candidates], candidates)


def _max_exponents(p: LaurentPoly) -> Tuple[int, ...]:
    if p.is_zero():
        return (0,) * p.nvars
    return tuple(max(col) for col in zip(*p.terms))


# endregion


# region linear relations
class PolynomialPresentation(Presentation):
    """k[e_1..e_r] modulo linear forms with integer coefficients."""

    def __init__(self, ring: CoefficientRing, nvars: int, linear_relations: Sequence[Sequence[int]] = (),
                 names: Sequence[str] = None):
        super().__init__(ring, nvars, names or default_names('e', nvars))
        self.linear_relations = tuple(tuple(int(v) for v in row) for row in linear_relations if any(row))
        self._free = [j for j in range(nvars) if all(row[j] == 0 for row in self.linear_relations)]
        self._bound = [j for j in range(nvars) if j not in self._free]
        self._setup()

    def _setup(self):
        # e = W·f on the bound columns; the ideal becomes (d_i·f_i)
        rows = [[row[j] for j in self._bound] for row in self.linear_relations]
        k = len(self._bound)
        _, D, W = smith_with_transforms(rows, k)
        d = [D[i][i] if i < len(D) else 0 for i in range(k)]
        p = self.ring.characteristic
        if self.ring.is_field:
            # over a field every nonzero d_i is a unit
            d = [0 if (v % p == 0 if p else v == 0) else 1 for v in d]
        self._moduli = d
        self._W = W
        self._W_inv = unimodular_inverse(W) if k else []

    @cached_property
    def _to_f(self) -> List[LaurentPoly]:
        return self._linear_images(self._W)

    @cached_property
    def _to_e(self) -> List[LaurentPoly]:
        return self._linear_images(self._W_inv)

    def _linear_images(self, matrix) -> List[LaurentPoly]:
        images = []
        for j in range(self.nvars):
            if j in self._free:
                images.append(LaurentPoly.variable(self.ring, self.nvars, j))
                continue
            row = matrix[self._bound.index(j)]
            images.append(LaurentPoly(self.ring, self.nvars, {
                _unit(self.nvars, self._bound[i]): row[i] for i in range(len(self._bound)) if row[i]}))
        return images

    def _modulus_of(self, exp: Sequence[int]) -> int:
        g = 0
        for i, j in enumerate(self._bound):
            if exp[j] > 0:
                if self._moduli[i] == 1:
                    return 1
                g = gcd(g, self._moduli[i])
        return g

    def reduce(self, p: LaurentPoly) -> LaurentPoly:
        self._check(p)
        if not any(self._moduli):
            return p
        f_poly = p.evaluate(self._to_f)
        terms = {}
        for exp, c in f_poly.terms.items():
            g = self._modulus_of(exp)
            if g == 1:
                continue
            if g and not self.ring.is_field:
                c = self.ring.residue(c, g)
            if c:
                terms[exp] = c
        return LaurentPoly(self.ring, self.nvars, terms).evaluate(self._to_e)

    def relations(self) -> List[LaurentPoly]:
        return [LaurentPoly(self.ring, self.nvars, {_unit(self.nvars, j): v for j, v in enumerate(row) if v})
                for row in self.linear_relations]

    def torsion(self) -> List[int]:
        return [d for d in self._moduli if d > 1]

    def is_domain(self) -> bool:
        return not self.torsion()

    def monomials(self, bound: int) -> List[LaurentPoly]:
        exps = [e for e in _graded(self.nvars, bound, 1)]
        exps.sort(key=lambda e: (sum(e), tuple(-v for v in e)))
        exps.append((0,) * self.nvars)
        result = []
        for e in exps:
            m = self.reduce(LaurentPoly.monomial(self.ring, self.nvars, e))
            if not m.is_zero():
                result.append(LaurentPoly.monomial(self.ring, self.nvars, e))
        return result

    def is_unit(self, p: LaurentPoly) -> bool:
        p = self.reduce(p)
        return p.is_constant() and self.ring.is_unit(p.constant_term())

    def inverse(self, p: LaurentPoly) -> LaurentPoly:
        p = self.reduce(p)
        if not self.is_unit(p):
            raise NotAUnit(f"laws:PolynomialPresentation.inverse:{self.to_string(p)} is not a recognised unit")
        return LaurentPoly.constant(self.ring, self.nvars, self.ring.inverse(p.constant_term()))

    def _divide(self, num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
        if not any(self._moduli):
            return num.exact_divide(den)
        if self.is_unit(den):
            return num * self.inverse(den)
        for var in self._free:
            quotient = self._synthetic_divide(num, den, var)
            if quotient is not None:
                return quotient
        degree = max(num.total_degree(), 0)
        candidates = [LaurentPoly.monomial(self.ring, self.nvars, e) for e in _graded(self.nvars, degree)]
        multiples = [LaurentPoly.monomial(self.ring, self.nvars, e) * rel
                     for e in _graded(self.nvars, degree) for rel in self.relations()]
        return self._linear_divide(num, den, candidates, multiples)


def _unit(nvars: int, index: int) -> Tuple[int, ...]:
    e = [0] * nvars
    e[index] = 1
    return tuple(e)
# endregion


# region truncated power series
class TruncatedPresentation(Presentation):
    """k[x_1..x_r] modulo total degree >= trunc and the given series relations."""

    def __init__(self, ring: CoefficientRing, nvars: int, trunc: int, series_relations: Sequence[LaurentPoly] = (),
                 names: Sequence[str] = None):
        super().__init__(ring, nvars, names or default_names('x', nvars))
        self.trunc = int(trunc)
        self.series_relations = tuple(r.truncate(self.trunc) for r in series_relations if not r.truncate(self.trunc).is_zero())
        self._monomials = _graded(nvars, self.trunc - 1)
        self._index = {e: i for i, e in enumerate(self._monomials)}
        self._lock = threading.Lock()
        self._span = None

    def _vector(self, p: LaurentPoly) -> list:
        vec = [self.ring.zero] * len(self._monomials)
        for exp, c in p.terms.items():
            if sum(exp) < self.trunc:
                vec[self._index[exp]] = c
        return vec

    def _poly(self, vec) -> LaurentPoly:
        return LaurentPoly(self.ring, self.nvars, {e: c for e, c in zip(self._monomials, vec) if c})

    def _relation_span(self):
        # pivots come from the lowest monomials first
        with self._lock:
            if self._span is None:
                rows = []
                for rel in self.series_relations:
                    order = rel.order()
                    for e in _graded(self.nvars, self.trunc - 1 - order):
                        rows.append(self._vector(rel.shift(e).truncate(self.trunc)))
                n = len(self._monomials)
                if not rows:
                    self._span = ([], ())
                elif self.ring.is_field:
                    self._span = field_rref(rows, n, self.ring.domain)
                else:
                    hnf = hermite_rows([[int(v) for v in row] for row in rows], n)
                    self._span = (hnf, tuple(next(j for j, v in enumerate(r) if v) for r in hnf))
                logger.debug(f"laws:TruncatedPresentation:relation span of rank {len(self._span[1])}")
            return self._span

    def reduce(self, p: LaurentPoly) -> LaurentPoly:
        self._check(p)
        p = p.truncate(self.trunc)
        if not self.series_relations:
            return p
        rows, pivots = self._relation_span()
        vec = self._vector(p)
        if self.ring.is_field:
            for row, col in zip(rows, pivots):
                c = vec[col]
                if c:
                    vec = [a - c * b for a, b in zip(vec, row)]
        else:
            vec = [self.ring.convert(v) for v in reduce_by_hermite([int(v) for v in vec], rows)]
        return self._poly(vec)

    def relations(self) -> List[LaurentPoly]:
        return list(self.series_relations)

    def describe(self) -> str:
        return super().describe() + f" + O({self.trunc})"

    def is_domain(self) -> bool:
        # x * x^(trunc - 1) = 0, so a truncation is never a domain
        return False

    def monomials(self, bound: int) -> List[LaurentPoly]:
        top = min(bound, self.trunc - 1)
        exps = sorted(_graded(self.nvars, top, 1), key=lambda e: (sum(e), tuple(-v for v in e)))
        exps.append((0,) * self.nvars)
        result = []
        for e in exps:
            m = LaurentPoly.monomial(self.ring, self.nvars, e)
            if not self.reduce(m).is_zero():
                result.append(m)
        return result

    def is_unit(self, p: LaurentPoly) -> bool:
        return self.ring.is_unit(self.reduce(p).constant_term())

    def inverse(self, p: LaurentPoly) -> LaurentPoly:
        p = self.reduce(p)
        if not self.is_unit(p):
            raise NotAUnit(f"laws:TruncatedPresentation.inverse:{self.to_string(p)} has no unit constant term")
        return self.reduce(TruncatedSeries(p, self.trunc).inverse().poly)

    def _divide(self, num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
        if self.is_unit(den):
            return num * self.inverse(den)
        order = den.order()
        # the quotient is only determined below trunc - order(den)
        top = self.trunc - 1 - order
        if top < 0:
            raise NotDivisible(f"laws:TruncatedPresentation.divide:{self.to_string(den)} vanishes to the truncation order")
        candidates = [LaurentPoly.monomial(self.ring, self.nvars, e) for e in _graded(self.nvars, top)]
        multiples = [m.truncate(self.trunc) for m in self._multiples()]
        return self._linear_divide(num, den, candidates, multiples, trunc=self.trunc).truncate(top + 1)

    def _multiples(self) -> List[LaurentPoly]:
        rows, _ = self._relation_span()
        return [self._poly(row) for row in rows]

    def precision_after(self, den: LaurentPoly) -> int:
        """Total-degree bound to which a quotient by den is determined."""
        return self.trunc - self.reduce(den).order()
# endregion
