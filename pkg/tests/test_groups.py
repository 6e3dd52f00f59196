import numpy as np
import pytest

from global_group_laws import (
    Character,
    DimensionMismatch,
    GroupHom,
    GroupSyntaxError,
    ZeroCharacter,
    cyclic,
    elem2,
    parse_character,
    parse_characters,
    parse_group,
    quotient,
    torus,
)
from global_group_laws.groups import (
    Family,
    GroupKind,
    enumerate_characters,
    graph,
    hom_from_rows,
    is_split,
    kernel_subgroup,
    primitive_and_split,
)


class TestParsing:
    @pytest.mark.parametrize('text, label', [
        ('1', '1'),
        ('T', 'T'),
        ('T^3', 'T^3'),
        ('C2^3', 'C2^3'),
        ('C5', 'C5'),
        ('T^2 / [2,0]', 'T^2 / [2,0]'),
    ])
    def test_group_labels(self, text, label):
        assert parse_group(text).label == label

    def test_cyclic_is_a_quotient(self):
        assert parse_group('C6') == quotient(1, [Character((6,))])
        assert parse_group('T / [6]') == cyclic(6)

    def test_c2_depends_on_family(self):
        assert parse_group('C2').kind is GroupKind.QUOTIENT
        assert parse_group('C2', Family.ELEM2) == elem2(1)
        assert parse_group('1', Family.ELEM2) == elem2(0)

    @pytest.mark.parametrize('text', ['S^1', 'T^', 'C', 'T^2 / [1]'])
    def test_bad_groups(self, text):
        with pytest.raises(GroupSyntaxError):
            parse_group(text)

    def test_characters(self):
        G = torus(2)
        assert parse_character('2,-3', G) == Character((2, -3))
        assert parse_characters('2,0;0,2', G) == [Character((2, 0)), Character((0, 2))]
        assert parse_character('1,3', elem2(2)) == Character((1, 1), 2)
        with pytest.raises(GroupSyntaxError):
            parse_character('1,2,3', G)


class TestCharacters:
    def test_arithmetic(self):
        V, W = Character((1, 2)), Character((3, -1))
        assert V + W == Character((4, 1))
        assert V - W == Character((-2, 3))
        assert V.scale(-2) == Character((-2, -4))
        with pytest.raises(DimensionMismatch):
            V + Character((1,))

    def test_f2_entries_reduce(self):
        assert Character((3, 2), 2) == Character((1, 0), 2)
        assert (Character((1, 1), 2) + Character((1, 0), 2)) == Character((0, 1), 2)

    def test_primitive_and_split(self):
        assert primitive_and_split(Character((4, -6))) == (2, Character((2, -3)))
        assert primitive_and_split(Character((1, 0))) == (1, Character((1, 0)))
        assert is_split(Character((3, 5)))
        assert not is_split(Character((3,)))
        with pytest.raises(ZeroCharacter):
            primitive_and_split(Character((0, 0)))

    def test_enumerate_characters(self):
        assert len(list(enumerate_characters(torus(2), bound=1))) == 8
        assert len(list(enumerate_characters(elem2(3)))) == 7
        split = list(enumerate_characters(torus(1), bound=3, split_only=True))
        assert split == [Character((-1,)), Character((1,))]

    def test_quotient_reduces_characters(self):
        C6 = cyclic(6)
        assert C6.is_zero_character(Character((12,)))
        assert C6.reduce_character(Character((7,))) == Character((1,))
        assert C6.invariant_factors() == [6]


class TestHomomorphisms:
    def test_pullback_is_v_times_m(self):
        # alpha: T^2 -> T^3
        alpha = hom_from_rows(torus(2), torus(3), [[1, 0], [1, 1], [0, 2]])
        assert alpha.pullback(Character((1, 1, 1))) == Character((2, 3))

    def test_compose_is_contravariant(self):
        alpha = hom_from_rows(torus(2), torus(3), [[1, 0], [1, 1], [0, 2]])
        beta = hom_from_rows(torus(1), torus(2), [[2], [-1]])
        V = Character((1, -1, 3))
        assert alpha.compose(beta).pullback(V) == beta.pullback(alpha.pullback(V))

    def test_descent_to_quotients(self):
        # z -> z^2 descends from C6 to C3, but z -> z does not
        hom_from_rows(cyclic(6), cyclic(3), [[2]])
        with pytest.raises(GroupSyntaxError):
            hom_from_rows(torus(1), cyclic(3), [[1]])
        with pytest.raises(GroupSyntaxError):
            hom_from_rows(cyclic(6), cyclic(4), [[1]])

    def test_families_do_not_mix(self):
        with pytest.raises(DimensionMismatch):
            GroupHom(elem2(1), torus(1), np.array([[1]], dtype=object))

    def test_graph(self):
        G = torus(2)
        W = Character((1, -2))
        assert graph(G, W).pullback(Character((3, 0, 2))) == Character((5, -4))


class TestKernelSubgroup:
    @pytest.mark.parametrize('entries', [(1, 0), (2, 3), (-3, 1), (1, 1, 1), (2, 3, 5)])
    def test_split_kernel(self, entries):
        G = torus(len(entries))
        V = Character(entries)
        splitting = kernel_subgroup(G, V)
        assert splitting.split
        assert splitting.group == torus(len(entries) - 1)
        assert splitting.inclusion.pullback(V).is_zero()
        # V restricted along the section is the identity character of T
        assert splitting.section.pullback(V) == Character((1,))
        # the retraction splits the inclusion
        for i in range(splitting.group.rank):
            W = Character.basis(splitting.group.rank, i)
            assert splitting.inclusion.pullback(splitting.retraction.pullback(W)) == W

    def test_non_split_kernel(self):
        splitting = kernel_subgroup(torus(1), Character((4,)))
        assert not splitting.split
        assert splitting.group == cyclic(4)

    def test_elem2_kernel(self):
        splitting = kernel_subgroup(elem2(3), Character((1, 1, 0), 2))
        assert splitting.split
        assert splitting.group == elem2(2)

    def test_zero_character(self):
        with pytest.raises(ZeroCharacter):
            kernel_subgroup(cyclic(3), Character((3,)))
