import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from global_group_laws import (
    Character,
    CoefficientRing,
    FamilyMismatch,
    GroupSyntaxError,
    InvalidFGL,
    NotARingMap,
    TruncatedFGL,
    cyclic,
    elem2,
    hom_from_rows,
    torus,
)
from global_group_laws.laws import (
    CompleteLaw,
    base_change,
    check_lift_independence,
    from_fgl,
    kan_restrict,
    kan_value,
    multiplicative_law,
    parse_law,
    same_underlying_map,
)

small_matrices = st.lists(st.lists(st.integers(-2, 2), min_size=2, max_size=2), min_size=2, max_size=2)


class TestEulerClasses:
    def test_multiplicative(self, mult):
        assert str(mult.euler_class(torus(1), Character((3,)))) == 't^3 - 1'
        assert str(mult.euler_class(torus(2), Character((2, -1)))) == 't1^2*t2^-1 - 1'
        assert mult.euler_class(torus(2), Character((0, 0))).is_zero()

    def test_additive(self, add_Z):
        assert str(add_Z.euler_class(torus(2), Character((2, -3)))) == '2*e1 - 3*e2'
        assert str(add_Z.coordinate()) == 'e'

    def test_two_torsion_additive(self, tor2):
        G = elem2(3)
        assert str(tor2.euler_class(G, Character((1, 0, 1), 2))) == 'e1 + e3'
        # e_V + e_V = 0 in characteristic two
        e = tor2.euler_class(G, Character((1, 1, 0), 2))
        assert (e + e).is_zero()

    def test_family_mismatch(self, mult, tor2):
        with pytest.raises(FamilyMismatch):
            tor2.euler_class(torus(1), Character((1,)))
        with pytest.raises(FamilyMismatch):
            mult.value(elem2(1))

    def test_complete_law_from_multiplicative_fgl(self, Z):
        law = from_fgl(TruncatedFGL.multiplicative(Z, 4))
        # [2]_F(x) = 2x + x^2
        assert str(law.euler_class(torus(1), Character((2,)))) == 'x^2 + 2*x'
        assert law.value(torus(1)).describe() == 'Z[x] + O(5)'
        assert law.law_id == 'fgl/Z/N=4'


class TestRestriction:
    @given(small_matrices, small_matrices)
    def test_functoriality_multiplicative(self, a, b):
        mult = multiplicative_law(CoefficientRing.integers())
        alpha = hom_from_rows(torus(2), torus(2), a)
        beta = hom_from_rows(torus(2), torus(2), b)
        x = mult.element(torus(2), 't1^2*t2 - 3*t2^-1 + 1')
        assert mult.restrict(alpha.compose(beta), x) == mult.restrict(beta, mult.restrict(alpha, x))

    def test_functoriality_additive(self, add_Z, rng):
        for _ in range(10):
            a = rng.integers(-3, 4, size=(2, 3)).tolist()
            b = rng.integers(-3, 4, size=(3, 1)).tolist()
            alpha = hom_from_rows(torus(3), torus(2), a)
            beta = hom_from_rows(torus(1), torus(3), b)
            x = add_Z.element(torus(2), 'e1^2 - 2*e1*e2 + 5')
            assert add_Z.restrict(alpha.compose(beta), x) == add_Z.restrict(beta, add_Z.restrict(alpha, x))

    def test_euler_classes_pull_back(self, mult):
        # e_V restricted along alpha is e_{alpha^* V}
        alpha = hom_from_rows(torus(1), torus(2), [[2], [-1]])
        V = Character((1, 3))
        e_V = mult.euler_class(torus(2), V)
        assert mult.restrict(alpha, e_V) == mult.euler_class(torus(1), alpha.pullback(V))


class TestBaseChange:
    def test_integers_to_f2(self, mult):
        law = base_change(mult, 'F2')
        assert law.law_id == 'mult/F2'
        e = law.euler_class(torus(1), Character((2,)))
        assert e == law.element(torus(1), 't^2 + 1')

    def test_no_ring_map(self, Q):
        with pytest.raises(NotARingMap):
            base_change(multiplicative_law(Q), 'F2')


class TestKanExtension:
    @pytest.mark.parametrize('n', range(1, 13))
    def test_cyclic_value(self, mult, Z, n):
        value = kan_value(mult, cyclic(n))
        t = multiplicative_law(Z).element(torus(1), 't')
        assert value.relations() == [t.payload ** n - 1]
        assert mult.element(cyclic(n), f't^{n}') == 1

    def test_additive_quotient_has_torsion(self, add_Z):
        value = add_Z.value(cyclic(4))
        assert not value.is_domain()
        assert add_Z.element(cyclic(4), '4*e') == 0
        assert add_Z.element(cyclic(4), 'e') != 0

    def test_lift_independence(self, mult):
        C6, C3 = cyclic(6), cyclic(3)
        alpha = hom_from_rows(C6, C3, [[2]])
        beta = hom_from_rows(C6, C3, [[8]])
        assert same_underlying_map(alpha, beta)
        x = mult.element(C3, 't^2 - 2*t + 7')
        assert check_lift_independence(mult, alpha, beta, x)
        assert kan_restrict(mult, alpha)(x) == mult.element(C6, 't^4 - 2*t^2 + 7')

    def test_different_maps_are_rejected(self, mult):
        C6, C3 = cyclic(6), cyclic(3)
        alpha = hom_from_rows(C6, C3, [[2]])
        beta = hom_from_rows(C6, C3, [[4]])
        assert not same_underlying_map(alpha, beta)
        with pytest.raises(GroupSyntaxError):
            check_lift_independence(mult, alpha, beta, mult.element(C3, 't'))

    def test_two_torsion_has_no_kan_extension(self, tor2):
        with pytest.raises(FamilyMismatch):
            kan_value(tor2, elem2(1))


class TestParseLaw:
    def test_named_laws(self, Q):
        assert parse_law('mult').law_id == 'mult/Z'
        assert parse_law('add', Q).law_id == 'add/Q'
        assert parse_law('2tor-add').ring.label == 'F2'

    def test_two_torsion_needs_f2(self, Z):
        with pytest.raises(NotARingMap):
            parse_law('2tor-add', Z)

    def test_unknown(self):
        with pytest.raises(GroupSyntaxError):
            parse_law('exp')

    def test_fgl_file(self, tmp_path, Z):
        path = tmp_path / 'mult.json'
        path.write_text(json.dumps(TruncatedFGL.multiplicative(Z, 4).to_json_dict()))
        law = parse_law(f'fgl:{path}')
        assert isinstance(law, CompleteLaw)
        assert law.law_id == 'fgl/Z/N=4'
        assert parse_law(f'fgl:{path}', truncation=3).law_id == 'fgl/Z/N=2'

    def test_fgl_file_problems(self, tmp_path):
        with pytest.raises(InvalidFGL):
            parse_law(f'fgl:{tmp_path / "missing.json"}')
        broken = tmp_path / 'broken.json'
        broken.write_text('{not json')
        with pytest.raises(InvalidFGL):
            parse_law(f'fgl:{broken}')

    def test_non_commutative_fgl_rejected(self, Z):
        with pytest.raises(InvalidFGL):
            from_fgl(TruncatedFGL(Z, 3, {(1, 2): 1}))
