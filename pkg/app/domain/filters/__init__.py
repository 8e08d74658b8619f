from app.domain.filters.schemas import AnnFilter
from app.domain.filters.service import (
    annihilators,
    filter_closure,
    filter_contains,
    omega,
)


__all__ = [
    "AnnFilter",
    "annihilators",
    "filter_closure",
    "filter_contains",
    "omega",
]
