import pytest
from pydantic import ValidationError

from app.core import settings
from app.core.config import CapacityLimits
from app.domain.algebra import (
    INTEGERS,
    InvalidConstructionError,
    cyclic_group,
    is_module_iso,
    make_cyclic_ring,
)
from app.domain.zoo import (
    ZooScope,
    chains,
    module_zoo,
    parse_ring_spec,
    random_supplements,
    ring_catalog,
    ring_isomorphism_notes,
    scope_modules,
)
from app.exceptions.base import CapacityError


class TestRingSpecs:
    @pytest.mark.parametrize("spec", ["integers", "Z", " Integers "])
    def test_integers(self, spec):
        assert parse_ring_spec(spec) is INTEGERS

    @pytest.mark.parametrize(
        "spec, label",
        [
            ("Z4", "Z_4"),
            ("Z_6", "Z_6"),
            ("Z2xZ3", "Z_2×Z_3"),
            ("Z2×Z2", "Z_2×Z_2"),
        ],
    )
    def test_finite(self, spec, label):
        assert parse_ring_spec(spec).label == label

    def test_unknown(self):
        with pytest.raises(InvalidConstructionError):
            parse_ring_spec("Q")

    def test_catalog(self):
        labels = [ring.label for ring in ring_catalog(6)]
        assert labels == ["Z_1", "Z_2", "Z_3", "Z_4", "Z_5", "Z_6", "Z_2×Z_2", "Z_2×Z_3", "Z"]

    def test_isomorphism_notes(self):
        assert ring_isomorphism_notes(ring_catalog(6)) == ["Z_6 ≅ Z_2×Z_3"]

    def test_catalog_capacity(self):
        with pytest.raises(CapacityError):
            ring_catalog(8, CapacityLimits(ring_order=4))


class TestModuleZoo:
    def test_integers(self):
        modules = module_zoo(INTEGERS, 8)
        assert len(modules) == 11
        assert [m.label for m in modules[:5]] == ["0", "Z_2", "Z_3", "Z_4", "Z_2 ⊕ Z_2"]

    @pytest.mark.parametrize("free_rank_cap", [1, 2])
    def test_cyclic_ring(self, free_rank_cap):
        modules = module_zoo(make_cyclic_ring(4), 4, free_rank_cap)
        assert [m.order for m in modules] == [1, 2, 4, 4]

    def test_pairwise_non_isomorphic(self):
        modules = module_zoo(make_cyclic_ring(4), 8)
        for i, first in enumerate(modules):
            for second in modules[i + 1 :]:
                assert is_module_iso(first, second) is None

    def test_vector_spaces(self):
        assert [m.order for m in module_zoo(make_cyclic_ring(2), 4)] == [1, 2, 4]

    def test_random_supplements_are_reproducible(self):
        modules = module_zoo(INTEGERS, 4)
        first = random_supplements(modules, 2, seed=7, max_order=16)
        second = random_supplements(modules, 2, seed=7, max_order=16)
        assert [m.label for m in first] == [m.label for m in second]
        assert len(first) <= 2
        for extra in first:
            assert extra.order <= 16
            assert all(is_module_iso(extra, m) is None for m in modules)

    def test_no_supplements(self):
        assert random_supplements(module_zoo(INTEGERS, 4), 0, seed=1, max_order=16) == []


class TestChains:
    def test_all_strict_chains(self):
        found = chains(cyclic_group(4), 3)
        assert [tuple(s.order for s in chain) for chain in found] == [
            (1,),
            (1, 2),
            (1, 2, 4),
            (1, 4),
            (2,),
            (2, 4),
            (4,),
        ]

    def test_depth(self):
        assert max(len(chain) for chain in chains(cyclic_group(8), 2)) == 2


class TestScope:
    def test_scope_modules(self, small_scope):
        result = scope_modules(small_scope(["integers", "Z4"], cap=4))
        assert list(result) == ["integers", "Z4"]
        assert [len(modules) for modules in result.values()] == [5, 4]

    def test_from_settings(self):
        scope = ZooScope.from_settings(rings=["Z2"], copies=None)
        assert scope.rings == ["Z2"]
        assert scope.copies == settings.zoo.copies

    def test_invalid_cap(self):
        with pytest.raises(ValidationError):
            ZooScope(rings=["Z2"], module_order_cap=0, free_rank_cap=1, chain_depth=1, copies=1)
