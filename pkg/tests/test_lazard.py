import pytest
from sympy import Poly, Rational, expand, symbols

from global_group_laws import DimensionMismatch, GroupSyntaxError, TruncatedFGL
from global_group_laws.completion import random_fgl
from global_group_laws.lazard import (
    ASSOCIATIVITY,
    COMMUTATIVITY,
    TWO_TORSION,
    indecomposable_ranks,
    smith_invariants,
    universal_fgl,
    universal_relations,
    universal_unknowns,
    validate_fgl,
)


@pytest.fixture(scope='module')
def plain_six():
    return universal_relations(6)


class TestUniversalRelations:
    def test_unknowns(self):
        assert universal_unknowns(4) == [(1, 1), (1, 2), (2, 1), (1, 3), (2, 2), (3, 1)]
        assert universal_fgl(3).ring.names == ('a11', 'a12', 'a21')

    def test_indecomposables_over_rationals(self, plain_six):
        ranks = indecomposable_ranks(plain_six)
        assert ranks[2] == 1
        assert ranks[4] == 1
        assert ranks[6] == 1

    def test_free_ranks_match(self, plain_six):
        summaries = {s.grading: s for s in smith_invariants(plain_six)}
        for grading in (2, 4, 6):
            assert summaries[grading].free_rank == 1

    def test_commutativity_relations(self, plain_six):
        assert 'a12 - a21' in plain_six.by_grading()[4]
        assert plain_six.unknown_grading(1, 1) == 2

    def test_two_torsion_forces_two_to_vanish(self):
        system = universal_relations(4, TWO_TORSION)
        assert '2' in system.constant_relations()
        assert system.unknown_grading(1, 1) == 1
        assert system.to_json_dict()['mode'] == TWO_TORSION

    def test_bad_arguments(self, plain_six):
        with pytest.raises(GroupSyntaxError):
            universal_relations(4, 'graded')
        with pytest.raises(DimensionMismatch):
            universal_relations(1)
        with pytest.raises(GroupSyntaxError):
            indecomposable_ranks(plain_six, 'Z')


class TestValidation:
    def test_valid_laws(self, Z, Q, rng):
        assert validate_fgl(TruncatedFGL.multiplicative(Z, 6)) == []
        assert validate_fgl(TruncatedFGL.additive(Z, 6)) == []
        assert validate_fgl(random_fgl(Q, 5, rng)) == []

    def test_degree_four_associativity_defect(self, Z):
        violations = validate_fgl(TruncatedFGL(Z, 4, {(2, 2): 1}))
        assert {v.kind for v in violations} == {ASSOCIATIVITY}
        assert {v.location: v.value for v in violations} == {(2, 1, 1): '-2', (1, 1, 2): '2'}
        assert all(v.degree == 4 for v in violations)

    def test_planted_commutativity_violations(self, Q, rng):
        for _ in range(10):
            F = random_fgl(Q, 5, rng)
            i = int(rng.integers(1, 3))
            j = int(rng.integers(i + 1, 6 - i))
            coefficients = F.coefficients
            coefficients[(i, j)] = F.coefficient(i, j) + 1
            violations = validate_fgl(TruncatedFGL(Q, 5, coefficients))
            assert [v.location for v in violations if v.kind == COMMUTATIVITY] == [(i, j)]
            assert (violations[0].kind, violations[0].location) == (COMMUTATIVITY, (i, j))
            assert Rational(violations[0].value) == 1
            assert min(v.degree for v in violations) == i + j

    @pytest.mark.parametrize('i, j', [(1, 3), (2, 2), (1, 4), (2, 3)])
    def test_planted_associativity_violations(self, Q, rng, i, j):
        for _ in range(3):
            F = random_fgl(Q, 5, rng)
            coefficients = F.coefficients
            for key in {(i, j), (j, i)}:
                coefficients[key] = F.coefficient(*key) + 1
            violations = validate_fgl(TruncatedFGL(Q, 5, coefficients))
            assert violations
            assert {v.kind for v in violations} == {ASSOCIATIVITY}
            assert violations[0].degree == i + j
            lowest = {v.location: Rational(v.value) for v in violations if v.degree == i + j}
            assert lowest == cocycle_defect(i, j)


def cocycle_defect(i, j):
    """Degree i + j part of the associativity residual added by a symmetric bump of a_ij."""
    x, y, z = symbols('x y z')

    def bump(u, v):
        return u**i * v**j + (u**j * v**i if i != j else 0)

    defect = Poly(expand(bump(x, y) + bump(x + y, z) - bump(y, z) - bump(x, y + z)), x, y, z)
    return {exp: Rational(c) for exp, c in defect.terms() if c}
