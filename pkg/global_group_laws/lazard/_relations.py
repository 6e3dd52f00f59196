"""
Global Group Laws: Universal Relations Module

The universal truncated formal group law F(x, y) = x + y + Σ a_ij x^i y^j
over Z[a_ij : 1 <= i, j, i + j <= N], and the relations its coefficients
must satisfy: a_ij = a_ji, the coefficients of F(F(x, y), z) - F(x, F(y, z))
through degree N and, for 2-torsion laws, the coefficients of [2]_F(x).

The indecomposables of the truncated Lazard ring in a grading are the
unknowns of that grading modulo the linear parts of the relations of the
same grading; their dimension over Q or F_2 is a rank count.

Functions Overview
------------------
- universal_relations(N, mode) -> RelationSystem
- indecomposable_ranks(system, field)
- smith_invariants(system)
"""

# Standard library imports
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple, Union

# Local application/library specific imports
from ..exceptions import DimensionMismatch, GroupSyntaxError
from ..kernel import (
    CoefficientRing,
    TruncatedFGL,
    associativity_residual,
    field_rank,
    smith_diagonal,
)

logger = logging.getLogger(__name__)

PLAIN = 'plain'
TWO_TORSION = 'two_torsion'
MODES = (PLAIN, TWO_TORSION)

DEFAULT_DEGREE = 6


def unknown_name(i: int, j: int) -> str:
    return f"a{i}{j}" if i < 10 and j < 10 else f"a{i}_{j}"


def _monomial_grading(degree: int, two_torsion: bool) -> int:
    """Grading of the coefficient of a monomial of total degree `degree`."""
    return TruncatedFGL.grading(degree - 1, 1, two_torsion)


@dataclass(frozen=True)
class Relation:
    """One polynomial relation among the a_ij.

    Parameters
    ----------
    source : str
        'commutativity', 'associativity' or 'two_series'.
    monomial : tuple of int
        (i, j) for commutativity, the x^i y^j z^k exponent for
        associativity, (k,) for the coefficient of x^k in [2]_F(x).
    grading : int
    poly : element of the relation ring
    """

    source: str
    monomial: Tuple[int, ...]
    grading: int
    poly: object


@dataclass
class RelationSystem:
    """Relations of the universal FGL truncated at degree N."""

    N: int
    mode: str
    ring: CoefficientRing
    unknowns: List[Tuple[int, int]]
    relations: List[Relation] = field(default_factory=list)

    @property
    def two_torsion(self) -> bool:
        return self.mode == TWO_TORSION

    @property
    def names(self) -> Tuple[str, ...]:
        return self.ring.names

    def unknown_grading(self, i: int, j: int) -> int:
        return TruncatedFGL.grading(i, j, self.two_torsion)

    def gradings(self) -> List[int]:
        return sorted({self.unknown_grading(i, j) for i, j in self.unknowns})

    def relations_in(self, grading: int) -> List[Relation]:
        return [r for r in self.relations if r.grading == grading]

    def unknowns_in(self, grading: int) -> List[int]:
        return [k for k, (i, j) in enumerate(self.unknowns) if self.unknown_grading(i, j) == grading]

    def linear_part(self, relation: Relation) -> Dict[int, int]:
        """Unknown index -> integer coefficient of the degree-one terms."""
        linear = {}
        for monom, c in relation.poly.terms():
            if sum(monom) == 1:
                linear[monom.index(1)] = int(c)
        return linear

    def constant_relations(self) -> List[str]:
        """Relations that are integers, e.g. "2" in 2-torsion mode."""
        return [self.to_string(r) for r in self.relations if r.poly.is_ground]

    def linear_matrix(self, grading: int) -> Tuple[List[List[int]], int]:
        columns = self.unknowns_in(grading)
        position = {k: c for c, k in enumerate(columns)}
        rows = []
        for relation in self.relations_in(grading):
            linear = self.linear_part(relation)
            row = [0] * len(columns)
            for k, c in linear.items():
                if k not in position:
                    raise DimensionMismatch(
                        f"lazard:RelationSystem.linear_matrix:{self.names[k]} has grading "
                        f"{self.unknown_grading(*self.unknowns[k])}, relation has {grading}")
                row[position[k]] = c
            if any(row):
                rows.append(row)
        return rows, len(columns)

    def to_string(self, relation: Relation) -> str:
        return self.ring.to_string(relation.poly)

    def by_grading(self) -> Dict[int, List[str]]:
        grouped = defaultdict(list)
        for relation in self.relations:
            grouped[relation.grading].append(self.to_string(relation))
        return dict(sorted(grouped.items()))

    def __len__(self):
        return len(self.relations)

    def to_json_dict(self) -> dict:
        return {
            'N': self.N,
            'mode': self.mode,
            'unknowns': list(self.names),
            'relations': [
                {'source': r.source, 'monomial': list(r.monomial), 'grading': r.grading, 'relation': self.to_string(r)}
                for r in self.relations
            ],
        }


def universal_unknowns(N: int) -> List[Tuple[int, int]]:
    """(i, j) with 1 <= i, j and i + j <= N, ordered by (i + j, i)."""
    return [(i, d - i) for d in range(2, N + 1) for i in range(1, d)]


def universal_fgl(N: int) -> TruncatedFGL:
    """x + y + Σ a_ij x^i y^j over Z[a_ij] with every a_ij an unknown."""
    unknowns = universal_unknowns(N)
    ring = CoefficientRing.polynomial(CoefficientRing.integers(), [unknown_name(i, j) for i, j in unknowns])
    gens = ring.domain.gens
    return TruncatedFGL(ring, N, {key: gens[k] for k, key in enumerate(unknowns)})


def universal_relations(N: int = DEFAULT_DEGREE, mode: str = PLAIN) -> RelationSystem:
    """Relations of the universal FGL through degree N.

    Parameters
    ----------
    N : int
        Degree bound, at least 2.
    mode : {'plain', 'two_torsion'}
        'two_torsion' adds the coefficients of [2]_F(x) and grades a_ij in
        degree i + j - 1.
    """
    if mode not in MODES:
        raise GroupSyntaxError(f"lazard:universal_relations:unknown mode '{mode}' (expected one of {MODES})")
    if N < 2:
        raise DimensionMismatch(f"lazard:universal_relations:degree bound must be at least 2, got {N}")
    two_torsion = mode == TWO_TORSION
    fgl = universal_fgl(N)
    ring = fgl.ring
    unknowns = universal_unknowns(N)
    gens = ring.domain.gens
    index = {key: k for k, key in enumerate(unknowns)}
    system = RelationSystem(N, mode, ring, unknowns)

    for i, j in unknowns:
        if i < j:
            poly = gens[index[(i, j)]] - gens[index[(j, i)]]
            system.relations.append(Relation('commutativity', (i, j), TruncatedFGL.grading(i, j, two_torsion), poly))

    residual = associativity_residual(fgl.series())
    for exp, c in sorted(residual.poly.terms.items(), key=lambda item: (sum(item[0]), tuple(-e for e in item[0]))):
        if sum(exp) <= N:
            system.relations.append(Relation('associativity', exp, _monomial_grading(sum(exp), two_torsion), c))

    if two_torsion:
        for k, c in enumerate(fgl.n_series(2).univariate_coefficients()):
            if k >= 1 and c:
                system.relations.append(Relation('two_series', (k,), _monomial_grading(k, True), c))
    logger.debug(f"lazard:universal_relations:N={N}, mode={mode}, {len(system)} relations")
    return system


def _field(system: RelationSystem, target: Union[CoefficientRing, str, None]) -> CoefficientRing:
    if target is None:
        return CoefficientRing.prime_field(2) if system.two_torsion else CoefficientRing.rationals()
    target = CoefficientRing.parse(target) if isinstance(target, str) else target
    if not target.is_field:
        raise GroupSyntaxError(f"lazard:indecomposable_ranks:{target.label} is not a field")
    return target


def indecomposable_ranks(system: RelationSystem, field_ring: Optional[Union[CoefficientRing, str]] = None) -> Dict[int, int]:
    """Dimension of the indecomposables in each grading over Q or F_p."""
    target = _field(system, field_ring)
    ranks = {}
    for grading in system.gradings():
        rows, ncols = system.linear_matrix(grading)
        ranks[grading] = ncols - field_rank(rows, ncols, target.domain)
    logger.debug(f"lazard:indecomposable_ranks:{system.mode} over {target.label}: {ranks}")
    return ranks


@dataclass(frozen=True)
class LatticeSummary:
    """Cokernel of the integral linear-part matrix in one grading."""

    grading: int
    unknowns: int
    free_rank: int
    torsion: Tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {'grading': self.grading, 'unknowns': self.unknowns,
                'free_rank': self.free_rank, 'torsion': list(self.torsion)}


def smith_invariants(system: RelationSystem) -> List[LatticeSummary]:
    """Smith invariants of the integral linear parts, per grading."""
    summaries = []
    for grading in system.gradings():
        rows, ncols = system.linear_matrix(grading)
        diagonal = smith_diagonal(rows, ncols) if rows else []
        nonzero = [d for d in diagonal if d]
        summaries.append(LatticeSummary(grading, ncols, ncols - len(nonzero), tuple(d for d in nonzero if d > 1)))
    return summaries
