from app.domain.purity.extension import (
    extends_to_ring,
    ideal_scope,
)
from app.domain.purity.oracles import (
    bounded_equational_purity,
    bounded_fp_oracle,
)
from app.domain.purity.revalidate import (
    revalidate_complement,
    revalidate_equation,
    revalidate_extension,
    revalidate_failure,
    revalidate_verdict,
)
from app.domain.purity.schemas import (
    ClassificationRecord,
    EquationSystem,
    ExtensionFailure,
    ExtensionWitness,
    FpFailure,
    OracleResult,
    PropertyVerdict,
    PurityVerdict,
    RingVerdict,
)
from app.domain.purity.service import (
    classify,
    hierarchy_violations,
    is_absolutely_pure,
    is_absolutely_self_pure,
    is_injective_baer,
    is_M_pure,
    is_pure,
    is_quasi_injective,
    is_regular_ring,
    is_self_pure,
    is_semisimple_ring,
)


__all__ = [
    "extends_to_ring",
    "ideal_scope",
    "bounded_equational_purity",
    "bounded_fp_oracle",
    "revalidate_complement",
    "revalidate_equation",
    "revalidate_extension",
    "revalidate_failure",
    "revalidate_verdict",
    "ClassificationRecord",
    "EquationSystem",
    "ExtensionFailure",
    "ExtensionWitness",
    "FpFailure",
    "OracleResult",
    "PropertyVerdict",
    "PurityVerdict",
    "RingVerdict",
    "classify",
    "hierarchy_violations",
    "is_absolutely_pure",
    "is_absolutely_self_pure",
    "is_injective_baer",
    "is_M_pure",
    "is_pure",
    "is_quasi_injective",
    "is_regular_ring",
    "is_self_pure",
    "is_semisimple_ring",
]
