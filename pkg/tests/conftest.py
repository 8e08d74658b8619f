from typing import Any

import pytest

from app.core.config import CapacityLimits
from app.domain.zoo import ZooScope


@pytest.fixture
def limits() -> CapacityLimits:
    return CapacityLimits()


@pytest.fixture
def small_scope() -> Any:
    def _make(rings: list[str], cap: int = 8, **overrides) -> ZooScope:
        values = {
            "rings": rings,
            "module_order_cap": cap,
            "free_rank_cap": 2,
            "chain_depth": 3,
            "copies": 2,
        }
        values.update(overrides)
        return ZooScope(**values)

    return _make


@pytest.fixture
def document_path(tmp_path) -> Any:
    from tests.generators import DocumentGenerator

    def _make(document: dict | None = None, name: str = "input.json") -> str:
        return DocumentGenerator.write(tmp_path / name, document or DocumentGenerator.integers_document())

    return _make
