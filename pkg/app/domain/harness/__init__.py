from app.domain.harness.schemas import (
    HarnessRun,
    TheoremReport,
    Violation,
)
from app.domain.harness.service import (
    THEOREMS,
    VIOLATION_NOTE,
    HarnessContext,
    build_context,
    check_direct_sum,
    check_hierarchy,
    check_noetherian_equivalence,
    check_oracle_agreement,
    check_product_decomposition,
    check_quasi_pure_remark,
    check_regular_equivalence,
    check_pure_implies_self_pure,
    check_restriction,
    check_self_pure_submodule_closure,
    check_semisimple,
    check_summand_closure,
    check_transitivity,
    describe_failure,
    regular_witness,
    run_all,
    run_check,
)


__all__ = [
    "HarnessRun",
    "TheoremReport",
    "Violation",
    "THEOREMS",
    "VIOLATION_NOTE",
    "HarnessContext",
    "build_context",
    "check_direct_sum",
    "check_hierarchy",
    "check_noetherian_equivalence",
    "check_oracle_agreement",
    "check_product_decomposition",
    "check_quasi_pure_remark",
    "check_regular_equivalence",
    "check_pure_implies_self_pure",
    "check_restriction",
    "check_self_pure_submodule_closure",
    "check_semisimple",
    "check_summand_closure",
    "check_transitivity",
    "describe_failure",
    "regular_witness",
    "run_all",
    "run_check",
]
