import numpy as np
import pytest

from app.domain.algebra import (
    INTEGERS,
    DimensionMismatchError,
    InvalidConstructionError,
    RingTable,
    UnsupportedRingError,
    idempotents,
    is_ring_iso,
    make_cyclic_ring,
    make_product_ring,
    require_finite,
    validate,
)


class TestCyclicRing:
    @pytest.mark.parametrize("n", [1, 2, 4, 6, 8])
    def test_valid(self, n):
        ring = make_cyclic_ring(n)
        assert ring.order == n
        assert ring.label == f"Z_{n}"
        assert validate(ring).ok

    def test_characteristic(self):
        assert make_cyclic_ring(6).characteristic == 6
        assert make_cyclic_ring(1).characteristic == 1

    @pytest.mark.parametrize("n", [0, -3])
    def test_rejects_non_positive(self, n):
        with pytest.raises(InvalidConstructionError):
            make_cyclic_ring(n)

    def test_tables_are_read_only(self):
        ring = make_cyclic_ring(4)
        with pytest.raises(ValueError):
            ring.add[0, 0] = 1

    def test_structural_equality(self):
        assert make_cyclic_ring(4) == make_cyclic_ring(4)
        assert make_cyclic_ring(4) != make_cyclic_ring(5)
        assert make_cyclic_ring(4) != INTEGERS


class TestProductRing:
    def test_index_layout(self):
        ring = make_product_ring(make_cyclic_ring(2), make_cyclic_ring(3))
        # (1, 2) -> 1*3 + 2
        assert ring.order == 6
        assert ring.one == 4
        assert ring.add[5, 1] == 3
        assert ring.label == "Z_2×Z_3"
        assert validate(ring).ok

    def test_chinese_remainder(self):
        product = make_product_ring(make_cyclic_ring(2), make_cyclic_ring(3))
        table = is_ring_iso(product, make_cyclic_ring(6))
        assert table is not None
        assert table[product.one] == 1

    def test_not_isomorphic(self):
        klein = make_product_ring(make_cyclic_ring(2), make_cyclic_ring(2))
        assert is_ring_iso(klein, make_cyclic_ring(4)) is None

    def test_rejects_integers(self):
        with pytest.raises(UnsupportedRingError):
            make_product_ring(INTEGERS, make_cyclic_ring(2))


class TestRingTable:
    def test_broken_identity(self):
        ring = RingTable(add=[[0, 1], [1, 0]], mul=[[0, 0], [0, 0]], zero=0, one=1)
        report = validate(ring)
        assert not report.ok
        assert report.kind == "ring"
        assert [v.axiom for v in report.violations] == ["mul_identity"]

    def test_shape_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            RingTable(add=[[0, 1], [1, 0]], mul=[[0, 0]], zero=0, one=1)

    def test_entry_out_of_range(self):
        with pytest.raises(DimensionMismatchError):
            RingTable(add=[[0, 2], [1, 0]], mul=[[0, 0], [0, 1]], zero=0, one=1)

    def test_idempotents(self):
        assert idempotents(make_cyclic_ring(6)) == [0, 1, 3, 4]

    def test_require_finite(self):
        ring = make_cyclic_ring(3)
        assert require_finite(ring, "test") is ring
        with pytest.raises(UnsupportedRingError):
            require_finite(INTEGERS, "test")

    def test_neg(self):
        assert np.array_equal(make_cyclic_ring(4).neg, [0, 3, 2, 1])
