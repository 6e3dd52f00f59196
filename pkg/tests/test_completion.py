import pytest

from global_group_laws import (
    Character,
    DimensionMismatch,
    InvalidFGL,
    NotAUnit,
    NotStrict,
    TruncatedFGL,
    TruncatedSeries,
    graph,
    torus,
    trivial_group,
)
from global_group_laws.completion import (
    Flag,
    change_coordinate,
    completed_fgl,
    completion_series,
    default_flag,
    flag_expand,
    gamma_coefficients,
    random_fgl,
    reassemble,
    strict_iso,
    theta_eval,
    unit_criterion,
    unit_series_of_inverse,
)
from global_group_laws.laws import from_fgl, multiplicative_law
from global_group_laws.lazard import classify


@pytest.fixture
def random_fgls(Q, rng):
    return [random_fgl(Q, 5, rng) for _ in range(5)]


class TestFlags:
    def test_default_flag_cycles(self):
        flag = default_flag(torus(1), 5)
        assert flag.to_json() == [[0], [1], [-1], [0], [1]]
        assert flag.is_epsilon_leading()

    def test_empty_flag(self):
        with pytest.raises(DimensionMismatch):
            Flag(torus(1), ())

    def test_expand_and_reassemble(self, mult, Z, rng, make_poly):
        group = torus(1)
        flag = default_flag(group, 4)
        for _ in range(5):
            x = mult.element(torus(2), make_poly(Z, 2, rng))
            assert reassemble(flag_expand(mult, group, flag, x)) == x

    def test_wrong_group(self, mult):
        x = mult.element(torus(1), 't')
        with pytest.raises(DimensionMismatch):
            flag_expand(mult, torus(1), default_flag(torus(1), 2), x)

    @pytest.mark.parametrize('base_rank', [0, 1])
    def test_theta_agrees_with_restriction(self, mult, Z, rng, make_poly, base_rank):
        group = torus(base_rank)
        for _ in range(25):
            chars = [tuple(int(v) for v in rng.integers(-2, 3, size=base_rank)) for _ in range(5)]
            flag = Flag.of(group, chars)
            V = group.character(tuple(int(v) for v in rng.integers(-3, 4, size=base_rank)))
            x = mult.element(group.times_circle(), make_poly(Z, base_rank + 1, rng))
            theta = theta_eval(flag_expand(mult, group, flag, x), V)
            direct = mult.restrict(graph(group, V), x)
            product = mult.one(group)
            for W in flag.chars:
                product = product * mult.euler_class(group, V + W)
            difference = theta - direct
            if product.is_zero():
                assert difference.is_zero()
            else:
                assert mult.value(group).divides(product.payload, difference.payload)

    def test_gamma_coefficients(self, mult):
        gammas = gamma_coefficients(mult, torus(1), (1,), 3)
        assert [str(g) for g in gammas] == ['t^-1', '0', '0']

    def test_unit_criterion(self, mult):
        assert unit_criterion(mult, mult.element(torus(1), 't^-1'))
        assert not unit_criterion(mult, mult.element(torus(1), 't + 1'))


class TestCompletedFGL:
    def test_multiplicative_through_degree_eight(self, mult, Z):
        completed = completed_fgl(mult, trivial_group(), depth=8)
        assert completed.to_fgl() == TruncatedFGL.multiplicative(Z, 8)

    def test_additive(self, add_Z, Z):
        assert completed_fgl(add_Z, trivial_group(), depth=5).to_fgl() == TruncatedFGL.additive(Z, 5)

    def test_round_trip_from_fgl(self, random_fgls):
        for F in random_fgls:
            assert classify(from_fgl(F), 5) == F

    @pytest.mark.parametrize('n', range(1, 7))
    def test_euler_classes_are_n_series(self, random_fgls, n):
        for F in random_fgls:
            law = from_fgl(F)
            e_n = law.euler_class(torus(1), Character((n,)))
            assert completion_series(law, e_n, F.N) == F.n_series(n)

    def test_to_fgl_needs_trivial_group(self, mult):
        completed = completed_fgl(mult, torus(1), depth=2)
        with pytest.raises(DimensionMismatch):
            completed.to_fgl()
        assert completed.to_json_dict()['flag'] == [[0], [1]]

    def test_theta_and_euler_tables(self, mult):
        completed = completed_fgl(mult, torus(1), depth=3)
        for key, value in completed.theta.items():
            # θ(V) sends y(ε) to e_V
            assert value == completed.euler[key]


class TestStrictIsomorphisms:
    def test_inverse_coordinate(self, mult, Z):
        lam = mult.element(torus(1), 't^-1')
        series = completion_series(mult, lam, 9)
        iso = strict_iso(TruncatedFGL.multiplicative(Z, 8), series)
        assert iso.phi.univariate_coefficients() == [0, 1, -1, 1, -1, 1, -1, 1, -1]
        assert iso.conjugate == TruncatedFGL(Z, 8, {(1, 1): -1})
        x = TruncatedSeries.variable(Z, 1, 9, 0)
        assert iso.phi.compose([iso.inverse]) == x
        assert iso.inverse.compose([iso.phi]) == x

    def test_changed_law_classifies_to_conjugate(self, mult, Z):
        changed = change_coordinate(mult, 't^-1')
        assert classify(changed, 6) == TruncatedFGL(Z, 6, {(1, 1): -1})

    def test_not_strict(self, Q):
        with pytest.raises(NotStrict):
            change_coordinate(multiplicative_law(Q), '2')
        lam = TruncatedSeries.from_coefficients(Q, 5, [2, 1])
        with pytest.raises(NotStrict):
            strict_iso(TruncatedFGL.additive(Q, 4), lam)

    def test_not_a_unit(self, mult):
        with pytest.raises(NotAUnit):
            change_coordinate(mult, 't + 1')

    def test_target_mismatch(self, Z):
        lam = TruncatedSeries.from_coefficients(Z, 5, [1, 1])
        with pytest.raises(InvalidFGL):
            strict_iso(TruncatedFGL.additive(Z, 4), lam, target=TruncatedFGL.additive(Z, 4))

    def test_inverse_change_composes_to_identity(self, Q, rng):
        F = random_fgl(Q, 8, rng)
        assert F.ring == Q and F.N == 8
        lam = TruncatedSeries.from_coefficients(Q, 9, [1, 1, -2])
        forward = strict_iso(F, lam)
        mu = unit_series_of_inverse(forward.phi)
        assert mu.constant_term() == Q.one
        backward = strict_iso(forward.conjugate, mu, target=F)
        x = TruncatedSeries.variable(Q, 1, 9, 0)
        assert backward.phi.compose([forward.phi]) == x
        assert forward.phi.compose([backward.phi]) == x
        assert backward.conjugate == F
