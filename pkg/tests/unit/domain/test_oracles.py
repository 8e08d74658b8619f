import numpy as np
import pytest

from app.core.config import CapacityLimits
from app.domain.algebra import (
    Submodule,
    UnsupportedRingError,
    abelian_group,
    cyclic_group,
    cyclic_module,
    make_cyclic_ring,
    regular_module,
)
from app.domain.purity import (
    bounded_equational_purity,
    bounded_fp_oracle,
    revalidate_equation,
)
from app.domain.purity.oracles import (
    bounded_spans,
    digits,
    evaluation_table,
    power_indices,
)
from app.exceptions.base import CapacityError
from tests.generators import ModuleGenerator


class TestHelpers:
    def test_digits(self):
        assert digits(5, 2, 3) == [1, 0, 1]
        assert digits(0, 4, 2) == [0, 0]

    def test_power_indices(self):
        assert list(power_indices(np.array([0, 2]), 4, 2)) == [0, 2, 8, 10]

    def test_evaluation_table(self):
        z2 = cyclic_group(2)
        val = evaluation_table(z2.coefficient_table(), z2.add, 2)
        # r = (1, 1), x = (1, 0): 1·1 + 1·0 = 1
        assert val.shape == (4, 4)
        assert val[3, 2] == 1
        assert val[3, 3] == 0

    def test_bounded_spans(self):
        spans = bounded_spans(regular_module(make_cyclic_ring(4)), 1)
        assert [tuple(s) for s in spans] == [(0, 2), (0, 1, 2, 3)]


class TestEquationalPurity:
    def test_finds_system(self):
        sub = ModuleGenerator.two_z4()
        result = bounded_equational_purity(sub, max_vars=1, max_eqs=1)
        assert result.found
        assert result.conclusive
        assert result.equation.coefficients == [[2]]
        assert result.equation.constants == [2]
        assert revalidate_equation(sub, result.equation)

    def test_summand_has_no_system(self):
        sub = Submodule(abelian_group([2, 2]), [0, 2])
        result = bounded_equational_purity(sub, max_vars=2, max_eqs=2)
        assert not result.found
        assert not result.conclusive
        assert result.searched > 0
        assert result.bounds == {"max_vars": 2, "max_eqs": 2}

    def test_oracle_space(self):
        sub = Submodule(abelian_group([2, 2]), [0, 2])
        with pytest.raises(CapacityError):
            bounded_equational_purity(sub, max_vars=2, max_eqs=2, limits=CapacityLimits(oracle_space=4))

    def test_rejects_forged_system(self):
        sub = ModuleGenerator.two_z4()
        result = bounded_equational_purity(sub, max_vars=1, max_eqs=1)
        forged = result.equation.model_copy(update={"solution": [0]})
        assert not revalidate_equation(sub, forged)


class TestFpOracle:
    def test_finds_non_extendable_map(self):
        result = bounded_fp_oracle(cyclic_module(make_cyclic_ring(4), 2), max_rank=1, max_gens=1)
        assert result.found
        failure = result.fp_failure
        assert failure.rank == 1
        assert failure.generators == [[2]]
        assert failure.images == [1]
        assert failure.rendered == "2 ↦ 1+2Z_4"

    def test_injective_module(self):
        result = bounded_fp_oracle(regular_module(make_cyclic_ring(4)), max_rank=2, max_gens=2)
        assert not result.found
        assert result.searched > 0

    def test_integers_rejected(self):
        with pytest.raises(UnsupportedRingError):
            bounded_fp_oracle(cyclic_group(2))
