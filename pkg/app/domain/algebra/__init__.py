from app.domain.algebra.exceptions import (
    AxiomError,
    DimensionMismatchError,
    InvalidConstructionError,
    StructureValidationError,
    UnsupportedRingError,
)
from app.domain.algebra.rings import (
    INTEGERS,
    BaseRing,
    IntegerRing,
    RingTable,
    idempotents,
    make_cyclic_ring,
    make_product_ring,
    require_finite,
)
from app.domain.algebra.modules import (
    FinModule,
    ModHom,
    Submodule,
    coefficient_tables,
    require_same_ring,
)
from app.domain.algebra.lattice import (
    complements,
    direct_complement,
    greedy_generators,
    intersection,
    span,
    submodule_sum,
    submodules,
)
from app.domain.algebra.constructions import (
    DirectSum,
    Quotient,
    abelian_group,
    cyclic_group,
    cyclic_module,
    direct_sum,
    power,
    product_module,
    quotient,
    regular_module,
    zero_module,
)
from app.domain.algebra.ideals import (
    LeftIdeal,
    annihilator,
    ideal_module,
    left_ideals,
    principal_ideal,
)
from app.domain.algebra.homs import (
    IdealHom,
    hom_set,
    identity,
    is_module_iso,
    is_ring_iso,
    isomorphism_invariant,
    iter_homs,
    iter_isomorphisms,
    kernel,
)
from app.domain.algebra.schemas import (
    AxiomViolation,
    ValidationReport,
)
from app.domain.algebra.validators import (
    ensure_valid,
    validate,
)


__all__ = [
    "AxiomError",
    "DimensionMismatchError",
    "InvalidConstructionError",
    "StructureValidationError",
    "UnsupportedRingError",
    "INTEGERS",
    "BaseRing",
    "IntegerRing",
    "RingTable",
    "idempotents",
    "make_cyclic_ring",
    "make_product_ring",
    "require_finite",
    "FinModule",
    "ModHom",
    "Submodule",
    "coefficient_tables",
    "require_same_ring",
    "complements",
    "direct_complement",
    "greedy_generators",
    "intersection",
    "span",
    "submodule_sum",
    "submodules",
    "DirectSum",
    "Quotient",
    "abelian_group",
    "cyclic_group",
    "cyclic_module",
    "direct_sum",
    "power",
    "product_module",
    "quotient",
    "regular_module",
    "zero_module",
    "LeftIdeal",
    "annihilator",
    "ideal_module",
    "left_ideals",
    "principal_ideal",
    "IdealHom",
    "hom_set",
    "identity",
    "is_module_iso",
    "is_ring_iso",
    "isomorphism_invariant",
    "iter_homs",
    "iter_isomorphisms",
    "kernel",
    "AxiomViolation",
    "ValidationReport",
    "ensure_valid",
    "validate",
]
