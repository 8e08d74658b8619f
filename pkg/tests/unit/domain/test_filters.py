import pytest

from app.domain.algebra import (
    INTEGERS,
    LeftIdeal,
    UnsupportedRingError,
    annihilator,
    cyclic_group,
    cyclic_module,
    left_ideals,
    make_cyclic_ring,
    make_product_ring,
    principal_ideal,
    regular_module,
    zero_module,
)
from app.domain.filters import (
    annihilators,
    filter_closure,
    filter_contains,
    omega,
)
from app.domain.zoo import (
    module_zoo,
    parse_ring_spec,
)


@pytest.fixture
def z4():
    return make_cyclic_ring(4)


class TestAnnihilators:
    def test_first_appearance_order(self, z4):
        anns = annihilators(cyclic_module(z4, 2))
        assert [a.label for a in anns] == ["Z_4", "{0,2}"]

    def test_regular_module(self, z4):
        assert [a.label for a in annihilators(regular_module(z4))] == ["Z_4", "0", "{0,2}"]


class TestOmega:
    def test_finite_ring(self, z4):
        assert [i.label for i in omega(cyclic_module(z4, 2))] == ["{0,2}", "Z_4"]

    def test_integers(self):
        assert [i.gen for i in omega(cyclic_group(4))] == [1, 2, 4]
        assert [i.gen for i in omega(zero_module(INTEGERS))] == [1]


class TestFilterClosure:
    def test_base_over_finite_ring(self, z4):
        flt = filter_closure(cyclic_module(z4, 2))
        assert [i.label for i in flt.base] == ["{0,2}", "Z_4"]
        assert flt.minimum.label == "{0,2}"
        assert flt.exponent is None

    def test_closed_under_intersection(self):
        ring = make_product_ring(make_cyclic_ring(2), make_cyclic_ring(2))
        flt = filter_closure(regular_module(ring))
        # аннуляторы (1,0) и (0,1) пересекаются по нулю
        assert [i.elements for i in flt.base] == [(0,), (0, 1), (0, 2), (0, 1, 2, 3)]

    def test_zero_module(self, z4):
        flt = filter_closure(zero_module(z4))
        assert [i.label for i in flt.base] == ["Z_4"]
        assert not filter_contains(flt, LeftIdeal(z4, [0, 2]))

    def test_integers(self):
        flt = filter_closure(cyclic_group(2))
        assert flt.exponent == 2
        assert flt.minimum.label == "2Z"

    def test_serialization(self, z4):
        dumped = filter_closure(cyclic_module(z4, 2)).model_dump(mode="json")
        assert dumped["ring"] == "Z_4"
        assert dumped["base"] == ["{0,2}", "Z_4"]
        assert dumped["module"] == "Z_4/2Z_4"


class TestFilterContains:
    @pytest.mark.parametrize(
        "gen, expected",
        [
            (1, True),
            (2, True),
            (4, False),
            (0, False),
        ],
    )
    def test_integers(self, gen, expected):
        flt = filter_closure(cyclic_group(2))
        assert filter_contains(flt, LeftIdeal(INTEGERS, gen=gen)) is expected

    def test_zero_module_over_integers(self):
        flt = filter_closure(zero_module(INTEGERS))
        assert flt.exponent == 1
        assert filter_contains(flt, LeftIdeal(INTEGERS, gen=1))
        assert not filter_contains(flt, LeftIdeal(INTEGERS, gen=2))

    def test_finite_ring(self, z4):
        flt = filter_closure(cyclic_module(z4, 2))
        assert filter_contains(flt, LeftIdeal(z4, [0, 2]))
        assert not filter_contains(flt, LeftIdeal(z4, [0]))

    def test_other_ring(self, z4):
        flt = filter_closure(cyclic_module(z4, 2))
        with pytest.raises(UnsupportedRingError):
            filter_contains(flt, LeftIdeal(INTEGERS, gen=2))


@pytest.fixture(params=["Z4", "Z6", "Z8", "Z2xZ2"], scope="module")
def ring_zoo(request):
    ring = parse_ring_spec(request.param)
    return ring, left_ideals(ring), module_zoo(ring, 8)


class TestFilterProperties:
    def test_upward_closed(self, ring_zoo):
        _, ideals, modules = ring_zoo
        for module in modules:
            flt = filter_closure(module)
            for small in ideals:
                if not filter_contains(flt, small):
                    continue
                assert all(filter_contains(flt, big) for big in ideals if small <= big), module.label

    def test_closed_under_intersection(self, ring_zoo):
        _, ideals, modules = ring_zoo
        for module in modules:
            flt = filter_closure(module)
            members = [ideal for ideal in ideals if filter_contains(flt, ideal)]
            for first in members:
                for second in members:
                    assert filter_contains(flt, first.intersection(second)), module.label

    def test_contains_every_annihilator(self, ring_zoo):
        _, _, modules = ring_zoo
        for module in modules:
            flt = filter_closure(module)
            assert all(filter_contains(flt, annihilator(module, m)) for m in range(module.order)), module.label

    @pytest.mark.parametrize("n", [4, 6, 8])
    def test_integers_agree_with_cyclic_ring(self, n):
        ring = make_cyclic_ring(n)
        divisors = [k for k in range(1, n + 1) if n % k == 0]
        for d in divisors:
            over_integers = filter_closure(cyclic_group(d))
            over_ring = filter_closure(cyclic_module(ring, d))
            for k in divisors:
                assert filter_contains(over_integers, LeftIdeal(INTEGERS, gen=k)) == filter_contains(
                    over_ring, principal_ideal(ring, k % n)
                ), (d, k)
