"""
Global Group Laws: Truncated Formal Group Law Module

A formal group law F(x, y) = x + y + Σ a_ij x^i y^j truncated at total
degree N, with the series operations built from it: n-series, the formal
inverse and F-linear combinations of several variables.

Functions Overview
------------------
- TruncatedFGL: coefficients, series(), n_series(), formal_inverse(),
  fgl_sum(), JSON conversion.
- associativity_residual / commutativity_defects / unit_defects: the
  axiom residues used for validation.
"""

# Standard library imports
import logging
from typing import Dict, List, Mapping, Sequence, Tuple

# Local application/library specific imports
from ..exceptions import InvalidFGL
from ._laurent import LaurentPoly
from ._rings import CoefficientRing
from ._series import TruncatedSeries

logger = logging.getLogger(__name__)


class TruncatedFGL:
    """Truncated formal group law over a ground ring.

    Parameters
    ----------
    ring : CoefficientRing
        Ground ring k.
    N : int
        Degree bound; a_ij is stored for 1 <= i, j and i + j <= N.
    coefficients : mapping (i, j) -> coefficient
        Missing entries are zero.
    """

    def __init__(self, ring: CoefficientRing, N: int, coefficients: Mapping[Tuple[int, int], object] = None):
        if N < 1:
            raise InvalidFGL(f"kernel:TruncatedFGL:degree bound {N} must be positive")
        self.ring = ring
        self.N = int(N)
        clean: Dict[Tuple[int, int], object] = {}
        for (i, j), c in (coefficients or {}).items():
            i, j = int(i), int(j)
            if i < 1 or j < 1 or i + j > self.N:
                if ring.convert(c):
                    raise InvalidFGL(f"kernel:TruncatedFGL:coefficient a_{i}{j} lies outside 1 <= i, j, i + j <= {N}")
                continue
            c = ring.convert(c)
            if c:
                clean[(i, j)] = c
        self._a = clean
        self._inverse = None

    # region constructors
    @classmethod
    def additive(cls, ring: CoefficientRing, N: int) -> 'TruncatedFGL':
        return cls(ring, N)

    @classmethod
    def multiplicative(cls, ring: CoefficientRing, N: int) -> 'TruncatedFGL':
        return cls(ring, N, {(1, 1): 1} if N >= 2 else {})

    @classmethod
    def from_series(cls, series: TruncatedSeries, N: int) -> 'TruncatedFGL':
        """Read a_ij off a two-variable series (unit terms are not checked here)."""
        coefficients = {}
        for (i, j), c in series.poly.terms.items():
            if i >= 1 and j >= 1 and i + j <= N:
                coefficients[(i, j)] = c
        return cls(series.ring, N, coefficients)
    # endregion

    def coefficient(self, i: int, j: int):
        return self._a.get((i, j), self.ring.zero)

    @property
    def coefficients(self) -> Dict[Tuple[int, int], object]:
        return dict(self._a)

    @property
    def trunc(self) -> int:
        return self.N + 1

    @staticmethod
    def grading(i: int, j: int, two_torsion: bool = False) -> int:
        """Degree of a_ij with the coordinate in degree -2 (or -1 for 2-torsion laws)."""
        return (i + j - 1) if two_torsion else 2 * (i + j - 1)

    def series(self) -> TruncatedSeries:
        terms = {(1, 0): 1, (0, 1): 1}
        terms.update(self._a)
        return TruncatedSeries(LaurentPoly(self.ring, 2, terms), self.trunc)

    def add(self, a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
        """F(a, b) for series without constant term."""
        return self.series().compose([a.truncate(self.trunc), b.truncate(self.trunc)])

    def formal_inverse(self) -> TruncatedSeries:
        """ι(x) with F(x, ι(x)) = 0."""
        if self._inverse is None:
            x = TruncatedSeries.variable(self.ring, 1, self.trunc, 0)
            iota = -x
            for _ in range(self.trunc):
                defect = self.add(x, iota)
                if defect.is_zero():
                    break
                iota = iota - defect
            self._inverse = iota
        return self._inverse

    def n_series(self, n: int) -> TruncatedSeries:
        """[n]_F(x); [0] = 0, [n+1](x) = F(x, [n](x)), negative n through ι."""
        x = TruncatedSeries.variable(self.ring, 1, self.trunc, 0)
        result = TruncatedSeries.zero(self.ring, 1, self.trunc)
        for _ in range(abs(int(n))):
            result = self.add(x, result)
        if n < 0:
            result = self.formal_inverse().compose([result])
        return result

    def fgl_sum(self, vector: Sequence[int], nvars: int) -> TruncatedSeries:
        """
        The F-linear combination Σ_F vector[i]·x_i in nvars variables.

        Each term is [vector[i]]_F(x_i); terms are folded left with F.
        """
        total = TruncatedSeries.zero(self.ring, nvars, self.trunc)
        for i, n in enumerate(vector):
            if not n:
                continue
            term = self.n_series(n).embed(nvars, [i])
            total = term if total.is_zero() else self.add(total, term)
        return total

    def over(self, ring: CoefficientRing, fn) -> 'TruncatedFGL':
        return TruncatedFGL(ring, self.N, {k: fn(c) for k, c in self._a.items()})

    def truncate(self, N: int) -> 'TruncatedFGL':
        return TruncatedFGL(self.ring, min(N, self.N), {k: c for k, c in self._a.items() if sum(k) <= N})

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedFGL):
            return NotImplemented
        return self.ring == other.ring and self.N == other.N and self._a == other._a

    def __hash__(self):
        return hash((self.ring, self.N, frozenset(self._a.items())))

    def __str__(self):
        return str(self.series())

    def __repr__(self):
        return f"TruncatedFGL({self.ring.label}, N={self.N}, F='{self}')"

    def sorted_coefficients(self) -> List[Tuple[int, int, object]]:
        return [(i, j, self._a[(i, j)]) for (i, j) in sorted(self._a, key=lambda k: (k[0] + k[1], k[0]))]

    def to_json_dict(self) -> dict:
        return {
            'ring': self.ring.label,
            'N': self.N,
            'a': [{'i': i, 'j': j, 'coef': self.ring.to_string(c)} for i, j, c in self.sorted_coefficients()],
        }

    @classmethod
    def from_json_dict(cls, payload: dict) -> 'TruncatedFGL':
        """
        Load a law from {"ring", "N", "a": [{"i", "j", "coef"}, ...]}.

        Parameters
        ----------
        payload : dict
            As written by `to_json_dict`; coefficients are ring labels or integers.

        Returns
        -------
        TruncatedFGL
            The axioms are not checked; see `validate_fgl`.

        Raises
        ------
        InvalidFGL
            When a key is missing or a coefficient lies outside the degree bound.
        """
        try:
            ring = CoefficientRing.parse(payload['ring'])
            return cls(ring, int(payload['N']), {(int(t['i']), int(t['j'])): t['coef'] for t in payload['a']})
        except (KeyError, TypeError) as err:
            raise InvalidFGL(f"kernel:TruncatedFGL.from_json_dict:malformed payload ({err})") from err


# region axiom residues
def unit_defects(series: TruncatedSeries) -> List[Tuple[int, int]]:
    """Exponents (k, 0) / (0, k) where F(x, 0) = x or F(0, y) = y fails."""
    defects = []
    for k in range(series.trunc):
        expected = series.ring.one if k == 1 else series.ring.zero
        for key in ((k, 0), (0, k)):
            if series.coefficient(key) != expected:
                defects.append(key)
    return defects


def commutativity_defects(series: TruncatedSeries) -> List[Tuple[int, int]]:
    """Pairs i < j with a_ij != a_ji."""
    defects = []
    for (i, j), c in series.poly.terms.items():
        if i < j and series.coefficient((j, i)) != c:
            defects.append((i, j))
    for (i, j), c in series.poly.terms.items():
        if i > j and not series.coefficient((j, i)) and (j, i) not in defects:
            defects.append((j, i))
    return sorted(defects)


def associativity_residual(series: TruncatedSeries) -> TruncatedSeries:
    """F(F(x, y), z) - F(x, F(y, z)) in three variables."""
    x, y, z = (TruncatedSeries.variable(series.ring, 3, series.trunc, i) for i in range(3))
    left = series.compose([series.compose([x, y]), z])
    right = series.compose([x, series.compose([y, z])])
    return left - right
# endregion
