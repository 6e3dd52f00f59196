import numpy as np
import pytest

import global_group_laws as ggl
from global_group_laws import (
    Character,
    CoefficientRing,
    LaurentPoly,
    OperationReceipt,
    RegularityReport,
    RingMismatch,
    TruncatedFGL,
    TruncatedSeries,
    parse_element,
    torus,
)


class TestReceipts:
    def test_plain_result(self):
        law = ggl.multiplicative_law()
        assert str(ggl.psi(law, 6)) == 't^2 - t + 1'

    def test_receipt(self):
        law = ggl.multiplicative_law('Z')
        value, receipt = ggl.psi(law, 6, return_receipt=True)
        assert str(value) == 't^2 - t + 1'
        assert isinstance(receipt, OperationReceipt)
        assert receipt.operation == 'psi'
        assert receipt.inputs == {'law': 'mult/Z', 'n': '6'}
        assert receipt.duration >= 0

    def test_ring_labels(self):
        assert ggl.additive_law('Q').law_id == 'add/Q'
        with pytest.raises(RingMismatch):
            ggl.multiplicative_law(5)


class TestKernelOperations:
    def test_arith(self, Z):
        a = parse_element('t + 1', Z, ('t',))
        b = parse_element('t - 1', Z, ('t',))
        assert ggl.arith(a, b, 'mul') == parse_element('t^2 - 1', Z, ('t',))
        assert ggl.arith(a, b, 'sub') == 2
        with pytest.raises(ValueError):
            ggl.arith(a, b, 'div')

    def test_series(self, Z):
        f = TruncatedSeries.from_coefficients(Z, 4, [0, 1, 1])
        assert ggl.revert_series(f).univariate_coefficients() == [0, 1, -1, 2]
        assert ggl.invert_series(1 - TruncatedSeries.variable(Z, 1, 4, 0)).univariate_coefficients() == [1, 1, 1, 1]

    def test_fgl_operations(self, Z):
        F = TruncatedFGL.multiplicative(Z, 4)
        assert ggl.n_series(F, 2).univariate_coefficients() == [0, 2, 1, 0, 0]
        assert ggl.fgl_sum(F, [1, 1]).poly == LaurentPoly(Z, 2, {(1, 0): 1, (0, 1): 1, (1, 1): 1})
        assert ggl.formal_inverse(F).univariate_coefficients() == [0, -1, 1, -1, 1]

    def test_primitive_and_split(self):
        assert ggl.primitive_and_split(Character((0, 6))) == (6, Character((0, 1)))


class TestCheckExactness:
    def test_single_character(self):
        law = ggl.multiplicative_law()
        report = ggl.check_exactness(law, torus(2), (1, 0), bound=1)
        assert isinstance(report, RegularityReport) and report.passed

    def test_list_of_characters(self):
        law = ggl.multiplicative_law()
        reports = ggl.check_exactness(law, torus(2), [(1, 0), (1, 1), (2, 1)], bound=1, jobs=2)
        assert [r.chars for r in reports] == [[(1, 0)], [(1, 1)], [(2, 1)]]
        assert all(r.passed for r in reports)

    def test_list_of_tuples(self):
        law = ggl.additive_law()
        reports = ggl.check_exactness(law, torus(2), [[(2, 0), (0, 2)], [(1, 0), (0, 1)]], bound=1)
        assert [r.passed for r in reports] == [False, True]

    def test_bound_from_environment(self, monkeypatch):
        monkeypatch.setenv('GGL_BOUND', '1')
        report = ggl.check_exact_sequence(ggl.multiplicative_law(), torus(1), (1,))
        assert report.bound == 1


class TestLawOperations:
    def test_kan_value(self):
        law = ggl.multiplicative_law()
        assert ggl.kan_value(law, ggl.cyclic(5)).describe() == 'Z[t] / (t^5 - 1)'

    def test_euler_and_decompose(self):
        law = ggl.multiplicative_law()
        e = ggl.euler_class(law, torus(1), (1,))
        result = ggl.split_decompose(law, torus(1), (1,), law.element(torus(1), 't^-1'), 3)
        assert result.euler == e

    def test_random_fgl_is_reproducible(self):
        first = ggl.random_fgl('Q', 4, np.random.default_rng(7))
        second = ggl.random_fgl(CoefficientRing.rationals(), 4, np.random.default_rng(7))
        assert first == second
        assert ggl.validate_fgl(first) == []

    def test_classify_depth_from_environment(self, monkeypatch):
        monkeypatch.setenv('GGL_DEPTH', '4')
        assert ggl.classify(ggl.multiplicative_law()).N == 4

    def test_universal_relations_default_degree(self):
        assert ggl.universal_relations().N == 6
        assert ggl.indecomposable_ranks(ggl.universal_relations(4)) == {2: 1, 4: 1, 6: 1}
