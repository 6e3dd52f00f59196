import pytest

from global_group_laws import CoefficientRing, elem2, torus
from global_group_laws.groups import enumerate_characters
from global_group_laws.laws import additive_law
from global_group_laws.parallel import run_exactness_sweep, run_regularity_sweep


class TestExactnessSweep:
    def test_threads_keep_input_order(self, mult):
        chars = list(enumerate_characters(torus(2), bound=2, split_only=True))
        serial = run_exactness_sweep(mult, torus(2), chars, bound=1, jobs=1)
        threaded = run_exactness_sweep(mult, torus(2), chars, bound=1, jobs=4)
        assert [r.chars for r in threaded] == [[tuple(V.entries)] for V in chars]
        assert [r.verdict for r in threaded] == [r.verdict for r in serial]
        assert all(r.passed for r in threaded)

    def test_one_group_per_character(self):
        law = additive_law(CoefficientRing.prime_field(3))
        reports = run_exactness_sweep(law, [torus(1), torus(1)], [(1,), (3,)], jobs=2)
        assert [r.passed for r in reports] == [True, False]
        assert str(reports[1].witness) == 'e'

    def test_group_count_mismatch(self, mult):
        with pytest.raises(ValueError):
            run_exactness_sweep(mult, [torus(1)], [(1,), (2,)])

    def test_receipt(self, tor2):
        chars = list(enumerate_characters(elem2(2)))
        reports, receipt = run_exactness_sweep(tor2, elem2(2), chars, return_receipt=True)
        assert len(reports) == 3
        assert receipt.operation == 'run_exactness_sweep'
        assert receipt.inputs['law'] == '2tor-add/F2'

    def test_jobs_from_environment(self, mult, monkeypatch):
        monkeypatch.setenv('GGL_JOBS', '3')
        reports = run_exactness_sweep(mult, torus(1), [(1,), (-1,)], bound=1)
        assert [r.passed for r in reports] == [True, True]


class TestRegularitySweep:
    def test_mixed_verdicts_in_order(self, add_Z):
        pairs = [[(2, 0), (0, 2)], [(1, 0), (0, 1)], [(2, 0), (0, 1)]]
        reports = run_regularity_sweep(add_Z, pairs, bound=1, jobs=3)
        assert [r.passed for r in reports] == [False, True, True]
        assert str(reports[0].witness) == 'e1'

    def test_explicit_group(self, tor2):
        reports = run_regularity_sweep(tor2, [[(1, 0, 0), (0, 1, 1)]], group=elem2(3))
        assert reports[0].passed
        assert reports[0].group == 'C2^3'
