import pytest

from app.core.config import CapacityLimits
from app.domain.algebra import (
    INTEGERS,
    DimensionMismatchError,
    IdealHom,
    LeftIdeal,
    UnsupportedRingError,
    abelian_group,
    annihilator,
    cyclic_group,
    cyclic_module,
    hom_set,
    is_module_iso,
    isomorphism_invariant,
    kernel,
    left_ideals,
    make_cyclic_ring,
    make_product_ring,
    principal_ideal,
    quotient,
    regular_module,
    validate,
)
from app.domain.zoo import (
    module_zoo,
    parse_ring_spec,
)
from app.exceptions.base import CapacityError
from tests.generators import ModuleGenerator


class TestLeftIdeal:
    def test_ideals_of_cyclic_ring(self):
        ideals = left_ideals(make_cyclic_ring(4))
        assert [i.label for i in ideals] == ["0", "{0,2}", "Z_4"]
        assert ideals[0].is_zero
        assert ideals[2].is_whole

    def test_integers_have_no_enumeration(self):
        with pytest.raises(UnsupportedRingError):
            left_ideals(INTEGERS)

    def test_ring_order_capacity(self):
        with pytest.raises(CapacityError) as exc:
            left_ideals(make_cyclic_ring(8), CapacityLimits(ring_order=4))
        assert exc.value.exit_code == 3

    def test_principal(self):
        assert principal_ideal(make_cyclic_ring(6), 2).elements == (0, 2, 4)
        assert principal_ideal(INTEGERS, -3).gen == 3

    @pytest.mark.parametrize(
        "first, second, expected",
        [
            (4, 2, True),
            (2, 4, False),
            (0, 5, True),
            (3, 0, False),
        ],
    )
    def test_integer_containment(self, first, second, expected):
        assert (LeftIdeal(INTEGERS, gen=first) <= LeftIdeal(INTEGERS, gen=second)) is expected

    def test_integer_intersection(self):
        assert LeftIdeal(INTEGERS, gen=4).intersection(LeftIdeal(INTEGERS, gen=6)).gen == 12
        assert LeftIdeal(INTEGERS, gen=4).intersection(LeftIdeal(INTEGERS, gen=0)).is_zero

    def test_integer_labels(self):
        assert LeftIdeal(INTEGERS, gen=0).label == "0"
        assert LeftIdeal(INTEGERS, gen=1).label == "Z"
        assert LeftIdeal(INTEGERS, gen=6).label == "6Z"
        assert 12 in LeftIdeal(INTEGERS, gen=6)
        assert 3 not in LeftIdeal(INTEGERS, gen=6)

    def test_annihilator(self):
        assert annihilator(cyclic_group(4), 2).gen == 2
        z2 = cyclic_module(make_cyclic_ring(4), 2)
        assert annihilator(z2, 1).elements == (0, 2)


class TestHomSet:
    def test_ideal_into_regular(self):
        ring = make_cyclic_ring(4)
        homs = hom_set(ModuleGenerator.ideal(4, [0, 2]), regular_module(ring))
        assert [f.images for f in homs] == [(0, 0), (0, 2)]
        assert [f.label for f in homs] == ["0", "2 ↦ 2"]

    def test_integer_ideal(self):
        assert len(hom_set(LeftIdeal(INTEGERS, gen=2), cyclic_group(4))) == 4
        assert len(hom_set(LeftIdeal(INTEGERS, gen=0), cyclic_group(4))) == 1

    def test_generator_capacity(self):
        ring = make_product_ring(make_cyclic_ring(2), make_cyclic_ring(2))
        whole = LeftIdeal(ring, range(4))
        with pytest.raises(CapacityError):
            hom_set(whole, regular_module(ring), CapacityLimits(generators=1))

    def test_different_rings(self):
        with pytest.raises(UnsupportedRingError):
            hom_set(LeftIdeal(INTEGERS, gen=2), regular_module(make_cyclic_ring(4)))


class TestIdealHom:
    def test_kernel_over_integers(self):
        f = IdealHom(LeftIdeal(INTEGERS, gen=2), cyclic_group(4), value=1)
        assert kernel(f).label == "8Z"

    def test_kernel_over_finite_ring(self):
        ring = make_cyclic_ring(4)
        f = IdealHom(LeftIdeal(ring, range(4)), regular_module(ring), images=[0, 2, 0, 2])
        assert kernel(f).elements == (0, 2)

    def test_evaluation_over_integers(self):
        f = IdealHom(LeftIdeal(INTEGERS, gen=2), cyclic_group(4), value=1)
        assert f(6) == 3
        with pytest.raises(DimensionMismatchError):
            f(3)

    def test_wrong_image_count(self):
        with pytest.raises(DimensionMismatchError):
            IdealHom(ModuleGenerator.ideal(4, [0, 2]), regular_module(make_cyclic_ring(4)), images=[0])

    def test_then(self):
        sub = ModuleGenerator.two_z4()
        projection = quotient(sub.parent, sub).projection
        f = IdealHom(LeftIdeal(INTEGERS, gen=1), sub.parent, value=3)
        assert f.then(projection).value == 1


class TestIsomorphism:
    def test_chinese_remainder(self):
        assert is_module_iso(cyclic_group(6), abelian_group([2, 3])) is not None
        assert isomorphism_invariant(cyclic_group(6)) == isomorphism_invariant(abelian_group([2, 3]))

    def test_not_isomorphic(self):
        assert is_module_iso(cyclic_group(4), abelian_group([2, 2])) is None
        assert isomorphism_invariant(cyclic_group(4)) != isomorphism_invariant(abelian_group([2, 2]))

    def test_same_object(self):
        z4 = cyclic_group(4)
        assert list(is_module_iso(z4, z4).table) == [0, 1, 2, 3]

    def test_witness_is_bijective(self):
        iso = is_module_iso(abelian_group([2, 3]), cyclic_group(6))
        assert iso.is_bijective


@pytest.fixture(params=["Z4", "Z6", "Z8", "Z2xZ2"], scope="module")
def ring_zoo(request):
    ring = parse_ring_spec(request.param)
    return ring, left_ideals(ring), module_zoo(ring, 8)


class TestHomProperties:
    def test_left_ideals_closed_under_intersection(self, ring_zoo):
        _, ideals, _ = ring_zoo
        for first in ideals:
            for second in ideals:
                assert first.intersection(second) in ideals

    def test_homs_from_ring_match_elements(self, ring_zoo):
        ring, _, modules = ring_zoo
        whole = LeftIdeal(ring, range(ring.order))
        for module in modules:
            assert len(hom_set(whole, module)) == module.order, module.label

    def test_every_hom_and_kernel_is_valid(self, ring_zoo):
        _, ideals, modules = ring_zoo
        for module in modules:
            for ideal in ideals:
                for f in hom_set(ideal, module):
                    assert validate(f).ok, f.label
                    assert validate(kernel(f)).ok, f.label
