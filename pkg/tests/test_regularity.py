import pytest
from sympy import Symbol, cyclotomic_poly

from global_group_laws import (
    Character,
    CoefficientRing,
    DependentCharacters,
    GroupSyntaxError,
    NotAUnit,
    NotDivisible,
    PsiUnavailable,
    TruncatedFGL,
    ZeroCharacter,
    cyclic,
    elem2,
    torus,
)
from global_group_laws.groups import enumerate_characters
from global_group_laws.laws import additive_law, from_fgl, multiplicative_law
from global_group_laws.regularity import (
    FAIL,
    RegularityReport,
    check_euler_product,
    check_exact_sequence,
    check_k_regular,
    euler_class,
    p2_leading_term_check,
    psi,
    psi_table,
    split_decompose,
    two_torsion_sum_relation,
)


def cyclotomic_terms(n):
    t = Symbol('t')
    return {(k,): int(c) for (k,), c in cyclotomic_poly(n, t, polys=True).terms()}


def _independent_pairs(rng, count):
    pairs = []
    while len(pairs) < count:
        a, b, c, d = (int(v) for v in rng.integers(-4, 5, size=4))
        if a * d - b * c:
            pairs.append([(a, b), (c, d)])
    return pairs


class TestPsi:
    def test_cyclotomic_up_to_thirty(self, mult):
        for n in range(1, 31):
            table = psi_table(mult, n)
            assert dict(table[n].payload.terms) == cyclotomic_terms(n), n
            assert check_euler_product(mult, n)

    def test_psi_six(self, mult):
        assert str(psi(mult, 6)) == 't^2 - t + 1'
        assert psi(mult, 1) == mult.euler_class(torus(1), Character((1,)))

    def test_psi_values_do_not_divide_each_other(self, mult):
        values = {n: psi(mult, n).payload for n in range(1, 13)}
        for m in values:
            for n in values:
                if m == n:
                    continue
                with pytest.raises(NotDivisible):
                    values[n].exact_divide(values[m])

    @pytest.mark.parametrize('n, expected', [(2, '2'), (4, '2'), (9, '3'), (6, '1'), (10, '1'), (1, 'e')])
    def test_additive_rationals(self, add_Q, n, expected):
        assert str(psi(add_Q, n)) == expected

    @pytest.mark.parametrize('n', [1, 4, 12, 30])
    def test_euler_product_for_domain_laws(self, add_Q, add_Z, n):
        assert check_euler_product(add_Q, n)
        assert check_euler_product(add_Z, n)

    def test_unavailable(self, tor2):
        with pytest.raises(PsiUnavailable):
            psi(tor2, 2)


class TestEulerClass:
    def test_examples(self, mult, tor2):
        assert str(euler_class(mult, torus(1), (3,))) == 't^3 - 1'
        assert euler_class(mult, torus(3), (0, 0, 0)).is_zero()
        assert str(euler_class(tor2, elem2(3), (1, 0, 1))) == 'e1 + e3'


class TestExactSequence:
    @pytest.mark.parametrize('label', ['Z', 'Q', 'F2'])
    @pytest.mark.parametrize('rank', [1, 2])
    def test_multiplicative_low_rank(self, label, rank):
        law = multiplicative_law(CoefficientRing.parse(label))
        for V in enumerate_characters(torus(rank), bound=3, split_only=True):
            report = check_exact_sequence(law, torus(rank), V, bound=2)
            assert report.passed, (V, report.reason)
            assert report.certified

    @pytest.mark.parametrize('label', ['Z', 'Q', 'F2'])
    def test_multiplicative_rank_three(self, label):
        law = multiplicative_law(CoefficientRing.parse(label))
        for V in enumerate_characters(torus(3), bound=3, split_only=True):
            assert check_exact_sequence(law, torus(3), V, bound=1).passed, V

    @pytest.mark.parametrize('rank', [1, 2, 3, 4])
    def test_two_torsion_additive(self, tor2, rank):
        for V in enumerate_characters(elem2(rank)):
            assert check_exact_sequence(tor2, elem2(rank), V).passed, V

    def test_additive_mod_p_is_not_regular(self):
        law = additive_law(CoefficientRing.prime_field(3))
        report = check_exact_sequence(law, torus(1), (3,))
        assert report.verdict == FAIL
        assert str(report.witness) == 'e'
        assert report.scope == 'counterexample'

    def test_zero_character(self, mult):
        with pytest.raises(ZeroCharacter):
            check_exact_sequence(mult, cyclic(3), (3,))
        with pytest.raises(ZeroCharacter):
            check_exact_sequence(mult, torus(2), (0, 0))

    def test_truncated_values_are_not_certified(self, Q):
        law = from_fgl(TruncatedFGL.additive(Q, 4))
        assert not law.value(torus(1)).is_domain()
        report = check_exact_sequence(law, torus(1), (1,))
        assert report.passed
        assert not report.certified
        assert report.scope == 'pass up to bound 3'
        with pytest.raises(PsiUnavailable):
            psi_table(law, 2)

    def test_integral_scope_mentions_rational_kernel_search(self, Z, Q):
        over_Z = check_exact_sequence(multiplicative_law(Z), torus(1), (1,))
        over_Q = check_exact_sequence(multiplicative_law(Q), torus(1), (1,))
        assert over_Z.scope == 'certified, kernel searched over Q (torsion not searched)'
        assert over_Z.to_json_dict()['rational_kernel'] is True
        assert over_Q.scope == 'certified'


class TestKRegular:
    def test_additive_integers_not_two_regular(self, add_Z):
        report = check_k_regular(add_Z, [(2, 0), (0, 2)])
        assert not report.passed
        assert str(report.witness) == 'e1'
        assert report.to_json_dict()['witness'] == 'e1'

    def test_multiplicative_random_pairs(self, mult, rng):
        for pair in _independent_pairs(rng, 20):
            assert check_k_regular(mult, pair, bound=1).passed, pair

    def test_additive_rationals(self, add_Q):
        report = check_k_regular(add_Q, [(2, 1), (1, 3)])
        assert report.passed and report.certified

    def test_multiplicative_example(self, mult):
        assert check_k_regular(mult, [(2, 0), (0, 3)], bound=2).passed

    def test_dependent(self, mult):
        with pytest.raises(DependentCharacters):
            check_k_regular(mult, [(1, 2), (2, 4)])

    def test_fail_needs_witness(self):
        with pytest.raises(ValueError):
            RegularityReport('mult/Z', 'T', [(1,)], FAIL, 3)


class TestSplitDecompose:
    def test_inverse_coordinate(self, mult):
        x = mult.element(torus(1), 't^-1')
        result = split_decompose(mult, torus(1), (1,), x, 3)
        assert [str(c) for c in result.coefficients] == ['1', '-1', '1']
        assert str(result.remainder) == '-t^-1'
        assert result.reassemble() == x

    def test_coordinate_and_euler_class(self, mult):
        x = mult.element(torus(1), 't')
        result = split_decompose(mult, torus(1), (1,), x, 3)
        assert [str(c) for c in result.coefficients] == ['1', '1', '0']
        e = mult.euler_class(torus(1), Character((1,)))
        result = split_decompose(mult, torus(1), (1,), e, 3)
        assert [str(c) for c in result.coefficients] == ['0', '1', '0']

    def test_random_multiplicative_round_trip(self, mult, Z, rng, make_poly):
        for _ in range(10):
            x = mult.element(torus(2), make_poly(Z, 2, rng))
            result = split_decompose(mult, torus(2), (1, 2), x, 3)
            assert result.reassemble() == x

    def test_two_torsion_round_trip(self, tor2, rng, make_poly):
        G = elem2(2)
        for _ in range(20):
            x = tor2.element(G, make_poly(tor2.ring, 2, rng, spread=3, polynomial=True))
            result = split_decompose(tor2, G, (1, 0), x, 3)
            assert result.reassemble() == x

    def test_non_split(self, mult):
        with pytest.raises(GroupSyntaxError):
            split_decompose(mult, torus(1), (2,), mult.element(torus(1), 't'), 2)


class TestTwoTorsion:
    def test_sum_relation(self, tor2):
        relation = two_torsion_sum_relation(tor2)
        assert relation.holds
        assert relation.leading == 1
        assert relation.x_prime.is_zero()
        assert relation.residual.is_zero()

    def test_two_is_zero(self, tor2):
        assert tor2.one(elem2(0)) * 2 == 0


class TestLeadingTerm:
    def test_multiplicative_rationals(self, Q):
        assert p2_leading_term_check(TruncatedFGL.multiplicative(Q, 5), (3, 0), (0, 3))

    def test_additive_two_invertible(self, Q):
        assert p2_leading_term_check(TruncatedFGL.additive(Q, 5), (2, 0), (0, 1))

    def test_multiplicity_not_a_unit(self):
        F5 = CoefficientRing.prime_field(5)
        with pytest.raises(NotAUnit):
            p2_leading_term_check(TruncatedFGL.multiplicative(F5, 5), (5, 0), (0, 1))

    def test_dependent(self, Q):
        with pytest.raises(DependentCharacters):
            p2_leading_term_check(TruncatedFGL.multiplicative(Q, 5), (1, 1), (2, 2))
