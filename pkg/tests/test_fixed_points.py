import pytest

from global_group_laws import (
    Character,
    CoefficientRing,
    GroupSyntaxError,
    LaurentPoly,
    PsiUnavailable,
    TruncatedFGL,
    UndecidablePresentation,
    ZeroCharacter,
    cyclic,
    torus,
)
from global_group_laws.fixed_points import (
    LocalizedElement,
    composite_kills,
    cyclic_fixed_points_mult,
    fixed_point_image,
    loc_eq,
    loc_is_zero,
    psi_kernel_check,
)
from global_group_laws.laws import from_fgl
from global_group_laws.regularity import psi


class TestLocalizedElements:
    def test_euler_class_over_itself(self, mult):
        e = mult.euler_class(torus(2), Character((1, -1)))
        assert loc_eq(mult, LocalizedElement(e, ((1, -1),)), LocalizedElement(mult.one(torus(2))))

    def test_factorization(self, mult):
        a = LocalizedElement(mult.element(torus(1), 't^2 - 1'), ((1,),))
        assert loc_eq(mult, a, LocalizedElement(mult.element(torus(1), 't + 1')))

    @pytest.mark.parametrize('n', [2, 3, 7])
    def test_additive_rationals(self, add_Q, n):
        a = LocalizedElement(add_Q.euler_class(torus(1), Character((n,))), ((1,),))
        assert loc_eq(add_Q, a, LocalizedElement(add_Q.element(torus(1), n)))

    def test_cyclic_group_uses_the_cyclic_model(self, mult):
        C3 = cyclic(3)
        # (t - 1)(t^2 - 1) = 3 modulo t^2 + t + 1
        three_over_e = LocalizedElement(mult.element(C3, 3), ((1,),))
        assert loc_eq(mult, three_over_e, LocalizedElement(mult.euler_class(C3, C3.character((2,)))))
        assert not loc_eq(mult, LocalizedElement(mult.one(C3), ((1,),)),
                          LocalizedElement(mult.euler_class(C3, C3.character((2,)))))

    def test_zero(self, add_Q):
        assert loc_is_zero(add_Q, LocalizedElement(add_Q.zero(torus(1)), ((2,),)))
        assert not loc_is_zero(add_Q, LocalizedElement(add_Q.one(torus(1))))

    def test_zero_denominator(self, mult):
        with pytest.raises(ZeroCharacter):
            LocalizedElement(mult.one(cyclic(3)), ((3,),))

    def test_undecidable(self, add_Z):
        a = LocalizedElement(add_Z.element(cyclic(4), 'e'), ((1,),))
        with pytest.raises(UndecidablePresentation):
            loc_is_zero(add_Z, a)

    def test_truncated_values_are_undecidable(self, Q):
        law = from_fgl(TruncatedFGL.additive(Q, 4))
        x = law.euler_class(torus(1), Character((1,)))
        with pytest.raises(UndecidablePresentation):
            loc_eq(law, LocalizedElement(x, ((1,),)), LocalizedElement(law.one(torus(1))))


class TestCyclicFixedPoints:
    def test_order_two_is_evaluation_at_minus_one(self, mult):
        model = cyclic_fixed_points_mult(2)
        assert model.describe() == 'Z[t] / (t + 1) with inverted t - 1'
        assert model.inverted_images() == [-2]
        e = mult.euler_class(torus(1), Character((1,)))
        assert model.reduce(e.payload) == -2

    def test_order_six(self):
        assert cyclic_fixed_points_mult(6).relation.to_string(('t',)) == 't^2 - t + 1'

    def test_bad_orders_and_rings(self):
        with pytest.raises(GroupSyntaxError):
            cyclic_fixed_points_mult(1)
        with pytest.raises(PsiUnavailable):
            cyclic_fixed_points_mult(3, CoefficientRing.prime_field(2))

    @pytest.mark.parametrize('k', range(-6, 7))
    def test_kernel_of_composite_is_psi_two(self, mult, Z, k):
        psi_2 = psi(mult, 2)
        value = mult.value(torus(1))
        for shift in (-1, 0, 1):
            x = mult.element(torus(1), LaurentPoly.monomial(Z, 1, (k,))) + shift
            if x.is_zero():
                continue
            killed = composite_kills(mult, 2, x)
            assert killed == fixed_point_image(mult, 2, x).is_zero()
            assert killed == value.divides(psi_2.payload, x.payload)

    @pytest.mark.parametrize('n', range(2, 7))
    def test_psi_kernel_check(self, mult, n):
        assert psi_kernel_check(mult, n)

    def test_image_needs_multiplicative_law(self, add_Q):
        with pytest.raises(PsiUnavailable):
            fixed_point_image(add_Q, 2, add_Q.coordinate())
