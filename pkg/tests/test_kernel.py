import pytest
from hypothesis import given
from hypothesis import strategies as st

from global_group_laws import (
    CoefficientRing,
    CompositionError,
    GroupSyntaxError,
    InvalidFGL,
    LaurentPoly,
    NotAUnit,
    NotDivisible,
    RingMismatch,
    TruncatedFGL,
    TruncatedSeries,
    parse_element,
)
from global_group_laws.kernel import field_rank, in_lattice, hermite_rows, integer_solve, smith_diagonal

ZZ_RING = CoefficientRing.integers()

laurent_terms = st.dictionaries(
    st.tuples(st.integers(-2, 2), st.integers(-2, 2)), st.integers(-5, 5), max_size=4)
laurent_polys = laurent_terms.map(lambda terms: LaurentPoly(ZZ_RING, 2, terms))


def _t(ring, text, names=('t',)):
    return parse_element(text, ring, names)


class TestCoefficientRing:
    def test_parse_labels(self):
        assert CoefficientRing.parse('Z') == CoefficientRing.integers()
        assert CoefficientRing.parse('Q').is_field
        assert CoefficientRing.parse('F7').label == 'F7'
        assert CoefficientRing.parse('F7').characteristic == 7

    @pytest.mark.parametrize('label', ['F4', 'R', 'F', 'Z[x]'])
    def test_parse_rejects(self, label):
        with pytest.raises(GroupSyntaxError):
            CoefficientRing.parse(label)

    def test_units(self, Z, Q, F2):
        assert Z.is_unit(Z.convert(-1))
        assert not Z.is_unit(Z.convert(2))
        assert Q.is_unit(Q.convert('2/3'))
        assert not F2.is_unit(F2.convert(2))
        with pytest.raises(NotAUnit):
            Z.inverse(Z.convert(2))

    def test_exact_quotient(self, Z):
        assert Z.exact_quotient(Z.convert(6), Z.convert(3)) == 2
        assert Z.exact_quotient(Z.convert(7), Z.convert(3)) is None


class TestLaurentPoly:
    def test_to_string_canonical(self, Z):
        p = LaurentPoly(Z, 2, {(1, 0): 2, (0, 1): -3})
        assert p.to_string(('e1', 'e2')) == '2*e1 - 3*e2'
        assert str(_t(Z, 't^2 - t + 1')) == 't^2 - t + 1'
        assert str(LaurentPoly.zero(Z, 1)) == '0'

    def test_parse_negative_exponents(self, Z):
        p = parse_element('t1^2*t2^-1 - 3', Z, ('t1', 't2'))
        assert p == LaurentPoly(Z, 2, {(2, -1): 1, (0, 0): -3})
        assert str(p) == 't1^2*t2^-1 - 3'

    def test_parse_unknown_symbol(self, Z):
        with pytest.raises(GroupSyntaxError):
            parse_element('t + s', Z, ('t',))

    def test_arithmetic_over_f2(self, F2):
        p = _t(F2, 't + 1')
        assert p * p == _t(F2, 't^2 + 1')
        assert p + p == 0

    def test_ring_mismatch(self, Z, Q):
        with pytest.raises(RingMismatch):
            _t(Z, 't') + _t(Q, 't')
        with pytest.raises(RingMismatch):
            LaurentPoly.one(Z, 1) + LaurentPoly.one(Z, 2)

    def test_exact_divide(self, Z):
        assert _t(Z, 't^3 - 1').exact_divide(_t(Z, 't - 1')) == _t(Z, 't^2 + t + 1')
        assert _t(Z, 't^-1 - 1').exact_divide(_t(Z, 't - 1')) == _t(Z, '-t^-1')
        with pytest.raises(NotDivisible):
            _t(Z, 't^2 + 1').exact_divide(_t(Z, 't - 1'))
        with pytest.raises(NotDivisible):
            _t(Z, 't').exact_divide(LaurentPoly.zero(Z, 1))

    def test_exact_divide_needs_integral_quotient(self, Z, Q):
        with pytest.raises(NotDivisible):
            _t(Z, '3*t').exact_divide(_t(Z, '2'))
        assert _t(Q, '3*t').exact_divide(_t(Q, '2')) == LaurentPoly(Q, 1, {(1,): '3/2'})

    def test_substitute_along_monomial_map(self, Z):
        p = parse_element('t1^2*t2^-1', Z, ('t1', 't2'))
        # t1 -> t1, t2 -> t1*t2
        assert p.substitute([[1, 0], [1, 1]], 2) == parse_element('t1*t2^-1', Z, ('t1', 't2'))
        # both variables to the single variable of T
        assert p.substitute([[1], [1]], 1) == _t(Z, 't')

    def test_monomial_inverse(self, Z):
        assert _t(Z, '-t^2').inverse() == _t(Z, '-t^-2')
        with pytest.raises(NotAUnit):
            _t(Z, '2*t').inverse()

    @given(laurent_polys, laurent_polys, laurent_polys)
    def test_ring_axioms(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == 0

    @given(laurent_polys, laurent_polys)
    def test_division_inverts_multiplication(self, a, b):
        if b.is_zero():
            return
        assert (a * b).exact_divide(b) == a


class TestTruncatedSeries:
    def test_multiplication_truncates(self, Z):
        x = TruncatedSeries.variable(Z, 1, 5, 0)
        assert (1 + x) * (1 - x) == 1 - x * x
        assert (x ** 5).is_zero()

    def test_compose(self, Z):
        f = TruncatedSeries.from_coefficients(Z, 5, [0, 1, 1])
        two_x = TruncatedSeries.from_coefficients(Z, 5, [0, 2])
        assert f.compose([two_x]) == TruncatedSeries.from_coefficients(Z, 5, [0, 2, 4])

    def test_compose_rejects_constant_terms(self, Z):
        f = TruncatedSeries.from_coefficients(Z, 5, [0, 1, 1])
        with pytest.raises(CompositionError):
            f.compose([TruncatedSeries.from_coefficients(Z, 5, [1, 1])])

    def test_inverse_geometric(self, Z):
        f = TruncatedSeries.from_coefficients(Z, 6, [1, -1])
        assert f.inverse().univariate_coefficients() == [1] * 6
        with pytest.raises(NotAUnit):
            TruncatedSeries.from_coefficients(Z, 6, [2, 1]).inverse()

    def test_revert(self, Z):
        f = TruncatedSeries.from_coefficients(Z, 5, [0, 1, 1])
        g = f.revert()
        assert g.univariate_coefficients() == [0, 1, -1, 2, -5]
        assert f.compose([g]) == TruncatedSeries.variable(Z, 1, 5, 0)

    def test_to_string(self, Z):
        f = TruncatedSeries.from_coefficients(Z, 3, [0, 1, -1])
        assert f.to_string() == '-x^2 + x + O(3)'


class TestTruncatedFGL:
    def test_multiplicative_n_series(self, Z):
        F = TruncatedFGL.multiplicative(Z, 5)
        # (1 + x)^3 - 1
        assert F.n_series(3).univariate_coefficients() == [0, 3, 3, 1, 0, 0]
        assert F.n_series(0).is_zero()

    def test_formal_inverse(self, Z):
        F = TruncatedFGL.multiplicative(Z, 5)
        iota = F.formal_inverse()
        assert iota.univariate_coefficients() == [0, -1, 1, -1, 1, -1]
        x = TruncatedSeries.variable(Z, 1, F.trunc, 0)
        assert F.add(x, iota).is_zero()

    def test_fgl_sum_additive(self, Z):
        F = TruncatedFGL.additive(Z, 4)
        expected = LaurentPoly(Z, 2, {(1, 0): 2, (0, 1): -3})
        assert F.fgl_sum((2, -3), 2).poly == expected

    def test_out_of_range_coefficient(self, Z):
        with pytest.raises(InvalidFGL):
            TruncatedFGL(Z, 3, {(2, 2): 1})
        with pytest.raises(InvalidFGL):
            TruncatedFGL(Z, 0)

    def test_json_payload(self, Q):
        F = TruncatedFGL(Q, 3, {(1, 1): '1/2', (1, 2): 1, (2, 1): 1})
        payload = F.to_json_dict()
        assert payload['a'][0] == {'i': 1, 'j': 1, 'coef': '1/2'}
        assert TruncatedFGL.from_json_dict(payload) == F
        with pytest.raises(InvalidFGL):
            TruncatedFGL.from_json_dict({'ring': 'Q'})


class TestLinearAlgebra:
    def test_smith_diagonal(self):
        assert smith_diagonal([[2, 4], [6, 8]], 2) == [2, 4]

    def test_lattice_membership(self):
        hnf = hermite_rows([[2, 0], [0, 3]], 2)
        assert in_lattice((4, 3), hnf)
        assert not in_lattice((1, 0), hnf)

    def test_integer_solve(self):
        assert integer_solve([[2, 0], [0, 3]], 2, [4, 9]) is not None
        assert integer_solve([[2, 0], [0, 3]], 2, [1, 0]) is None

    def test_field_rank(self, F2, Q):
        assert field_rank([[1, 1], [1, 1]], 2, F2.domain) == 1
        assert field_rank([[1, 1], [1, -1]], 2, Q.domain) == 2
        assert field_rank([[1, 1], [1, -1]], 2, F2.domain) == 1
