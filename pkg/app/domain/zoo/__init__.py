from app.domain.zoo.schemas import ZooScope
from app.domain.zoo.service import (
    chains,
    module_zoo,
    parse_ring_spec,
    random_supplements,
    ring_catalog,
    ring_isomorphism_notes,
    scope_modules,
)


__all__ = [
    "ZooScope",
    "chains",
    "module_zoo",
    "parse_ring_spec",
    "random_supplements",
    "ring_catalog",
    "ring_isomorphism_notes",
    "scope_modules",
]
