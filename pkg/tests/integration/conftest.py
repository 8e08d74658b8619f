import pytest

from app.core.config import CapacityLimits
from app.domain.zoo import ZooScope


ACCEPTANCE_RINGS: list[str] = ["integers", "Z2", "Z4", "Z6", "Z8", "Z2xZ2"]


@pytest.fixture(scope="session")
def acceptance_limits() -> CapacityLimits:
    return CapacityLimits()


@pytest.fixture(scope="session")
def acceptance_scope() -> ZooScope:
    """
    Полный зоопарк: модули порядка <= 16 над Z и над каждым конечным кольцом.
    """

    return ZooScope.from_settings(
        rings=ACCEPTANCE_RINGS,
        module_order_cap=16,
        free_rank_cap=2,
        chain_depth=3,
        copies=3,
        seed=0,
        random_supplements=0,
    )
