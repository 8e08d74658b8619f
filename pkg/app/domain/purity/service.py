from typing import Iterable

import numpy as np

from app.core import logger
from app.core.config import (
    CapacityLimits,
    default_limits,
)
from app.domain.algebra import (
    FinModule,
    LeftIdeal,
    RingTable,
    Submodule,
    direct_complement,
    iter_homs,
    kernel,
    left_ideals,
    principal_ideal,
    require_finite,
    require_same_ring,
)
from app.domain.algebra.homs import IdealHom
from app.domain.filters import (
    AnnFilter,
    filter_closure,
    filter_contains,
)
from app.domain.purity.extension import (
    extends_to_ring,
    ideal_scope,
)
from app.domain.purity.oracles import bounded_equational_purity
from app.domain.purity.schemas import (
    ClassificationRecord,
    ExtensionFailure,
    PropertyVerdict,
    PurityVerdict,
    RingVerdict,
)
from app.exceptions.base import InvariantViolationError
from app.utils.numbers import factorize


FINITE_REDUCTION_NOTE = (
    "Finite modules are algebraically compact: absolute purity is decided by the Baer "
    "test and purity by the direct-summand test."
)
FG_VACUOUS_NOTE = (
    "Every left ideal of a finite ring and of Z is finitely generated, so the absolutely "
    "self pure and quasi-injective criteria quantify over the same ideals."
)
INTEGER_BOUND_NOTE = (
    "Over Z only ideals nZ with n dividing the filter exponent can carry a qualifying "
    "nonzero map; the quantifier is restricted to those and 0Z."
)


def _failure(f: IdealHom, ambient_element: int | None = None, ambient: FinModule | None = None) -> ExtensionFailure:
    return ExtensionFailure(
        ideal=f.domain,
        hom=f,
        kernel=kernel(f),
        ambient_element=ambient_element,
        ambient_label=ambient.element_label(ambient_element) if ambient is not None else None,
    )


def _qualifying_homs(
    module: FinModule,
    flt: AnnFilter | None,
    limits: CapacityLimits,
    integer_sweep: int | None,
) -> Iterable[IdealHom]:
    """
    Отображения f: L → module (L по возрастанию, f в каноническом порядке),
    ядро которых лежит в фильтре ``flt``; при ``flt`` = None - все отображения.
    """

    bound: int = flt.exponent if flt is not None and flt.exponent is not None else module.exponent
    for ideal in ideal_scope(module.ring, bound, limits, integer_sweep=integer_sweep):
        for f in iter_homs(ideal, module, limits):
            if flt is None or filter_contains(flt, kernel(f)):
                yield f


def _extension_test(
    module: FinModule,
    flt: AnnFilter | None,
    limits: CapacityLimits,
    integer_sweep: int | None,
) -> ExtensionFailure | None:
    for f in _qualifying_homs(module, flt, limits, integer_sweep):
        if extends_to_ring(f) is None:
            return _failure(f)
    return None


def _relative_test(
    sub: Submodule,
    flt: AnnFilter,
    limits: CapacityLimits,
    integer_sweep: int | None,
) -> ExtensionFailure | None:
    """
    Первая пара (L, f) с f: L → A, которая продолжается до R → B, но не до R → A.
    """

    inner: FinModule = sub.module
    inclusion = sub.inclusion
    for f in _qualifying_homs(inner, flt, limits, integer_sweep):
        outer = extends_to_ring(f.then(inclusion))
        if outer is None:
            continue
        if extends_to_ring(f) is None:
            return _failure(f, outer.element, sub.parent)
    return None


def is_M_pure(
    sub: Submodule,
    test_module: FinModule,
    limits: CapacityLimits | None = None,
    *,
    integer_sweep: int | None = None,
) -> PurityVerdict:
    """
    M-чистота подмодуля A ≤ B: каждое f: L → A с ker f ∈ Ω̄(M), продолжающееся
    до R → B, продолжается до R → A.

    :raises UnsupportedRingError: Если M задан над другим кольцом.
    """

    limits = limits or default_limits()
    require_same_ring(sub.parent, test_module)
    failure = _relative_test(sub, filter_closure(test_module), limits, integer_sweep)

    logger.debug(
        "M-purity checked",
        submodule=sub.label,
        ambient=sub.parent.label,
        test_module=test_module.label,
        verdict=failure is None,
    )
    return PurityVerdict(
        property="M-pure",
        submodule=sub.label,
        ambient=sub.parent.label,
        verdict=failure is None,
        failure=failure,
        notes=[] if sub.parent.ring.is_finite else [INTEGER_BOUND_NOTE],
    )


def is_self_pure(
    sub: Submodule,
    limits: CapacityLimits | None = None,
    *,
    integer_sweep: int | None = None,
) -> PurityVerdict:
    """
    Самочистота A ≤sp B: M-чистота при M = A.
    """

    verdict = is_M_pure(sub, sub.module, limits, integer_sweep=integer_sweep)
    return verdict.model_copy(update={"property": "self-pure"})


def is_absolutely_self_pure(
    module: FinModule,
    limits: CapacityLimits | None = None,
    *,
    integer_sweep: int | None = None,
) -> PropertyVerdict:
    """
    Абсолютная самочистота: каждое f из конечно порожденного левого идеала L в A
    с ker f ∈ Ω̄(A) продолжается до R → A.
    """

    limits = limits or default_limits()
    failure = _extension_test(module, filter_closure(module), limits, integer_sweep)
    return PropertyVerdict(
        property="absolutely_self_pure",
        module=module.label,
        verdict=failure is None,
        failure=failure,
        notes=[FG_VACUOUS_NOTE],
    )


def is_quasi_injective(
    module: FinModule,
    limits: CapacityLimits | None = None,
    *,
    integer_sweep: int | None = None,
) -> PropertyVerdict:
    """
    Квазиинъективность по критерию через идеалы: каждое f: L → A с ker f ∈ Ω̄(A)
    продолжается до R → A, L пробегает все левые идеалы.
    """

    limits = limits or default_limits()
    failure = _extension_test(module, filter_closure(module), limits, integer_sweep)
    return PropertyVerdict(
        property="quasi_injective",
        module=module.label,
        verdict=failure is None,
        failure=failure,
        notes=[FG_VACUOUS_NOTE],
    )


def _integer_baer_failure(module: FinModule) -> ExtensionFailure | None:
    """
    Над Z конечный модуль инъективен только если он нулевой. Для простого p | exp(A)
    отображение pZ → A, p ↦ a с a ∉ pA не продолжается.
    """

    if module.is_zero:
        return None
    p: int = min(factorize(module.exponent))
    multiples = module.multiples[p % module.exponent]
    a: int = int(np.flatnonzero(~np.isin(np.arange(module.order), multiples))[0])
    f = IdealHom(LeftIdeal(module.ring, gen=p), module, value=a)
    return _failure(f)


def is_injective_baer(
    module: FinModule,
    limits: CapacityLimits | None = None,
) -> PropertyVerdict:
    """
    Критерий Бэра: каждое отображение из каждого левого идеала продолжается до R → A.
    """

    limits = limits or default_limits()
    if module.ring.is_finite:
        failure = _extension_test(module, None, limits, None)
    else:
        failure = _integer_baer_failure(module)
    return PropertyVerdict(
        property="injective",
        module=module.label,
        verdict=failure is None,
        failure=failure,
    )


def is_absolutely_pure(
    module: FinModule,
    limits: CapacityLimits | None = None,
) -> PropertyVerdict:
    """
    Абсолютная чистота конечного модуля совпадает с инъективностью.
    """

    verdict = is_injective_baer(module, limits)
    return verdict.model_copy(
        update={"property": "absolutely_pure", "notes": [FINITE_REDUCTION_NOTE]},
    )


def is_pure(
    sub: Submodule,
    limits: CapacityLimits | None = None,
    *,
    max_vars: int | None = None,
    max_eqs: int | None = None,
) -> PurityVerdict:
    """
    Чистота A ≤ B для конечных модулей: A - прямое слагаемое B. При отрицательном
    вердикте прикладывается система уравнений из ограниченного оракула, если она найдена.
    """

    limits = limits or default_limits()
    complement = direct_complement(sub, limits)
    if complement is not None:
        return PurityVerdict(
            property="pure",
            submodule=sub.label,
            ambient=sub.parent.label,
            verdict=True,
            complement=complement,
            notes=[FINITE_REDUCTION_NOTE],
        )

    oracle = bounded_equational_purity(sub, max_vars, max_eqs, limits)
    if oracle.equation is None:
        logger.warning(
            "No equation witness within bounds for a non-summand",
            submodule=sub.label,
            ambient=sub.parent.label,
            bounds=oracle.bounds,
        )
    return PurityVerdict(
        property="pure",
        submodule=sub.label,
        ambient=sub.parent.label,
        verdict=False,
        equation=oracle.equation,
        notes=[FINITE_REDUCTION_NOTE],
    )


def is_regular_ring(
    ring: RingTable,
    limits: CapacityLimits | None = None,
) -> RingVerdict:
    """
    Регулярность: каждый главный левый идеал - прямое слагаемое R как левого модуля.
    Свидетель - первый главный идеал без дополнения.
    """

    ring = require_finite(ring, "is_regular_ring")
    limits = limits or default_limits()

    seen: set[LeftIdeal] = set()
    for x in range(ring.order):
        ideal = principal_ideal(ring, x)
        if ideal in seen:
            continue
        seen.add(ideal)
        if direct_complement(ideal.as_submodule(), limits) is None:
            return RingVerdict(property="regular", ring=ring.label, verdict=False, witness=ideal)
    return RingVerdict(property="regular", ring=ring.label, verdict=True)


def is_semisimple_ring(
    ring: RingTable,
    limits: CapacityLimits | None = None,
    *,
    cross_check: bool = True,
) -> RingVerdict:
    """
    Полупростота: каждый левый идеал - прямое слагаемое. Конечное кольцо нетерово,
    поэтому результат обязан совпасть с регулярностью.

    :raises InvariantViolationError: Если ``cross_check`` и вердикты расходятся.
    """

    ring = require_finite(ring, "is_semisimple_ring")
    limits = limits or default_limits()

    verdict = RingVerdict(property="semisimple", ring=ring.label, verdict=True)
    for ideal in left_ideals(ring, limits):
        if direct_complement(ideal.as_submodule(), limits) is None:
            verdict = RingVerdict(property="semisimple", ring=ring.label, verdict=False, witness=ideal)
            break

    if cross_check:
        regular = is_regular_ring(ring, limits)
        if regular.verdict != verdict.verdict:
            raise InvariantViolationError(
                f"{ring.label}: semisimple={verdict.verdict} but regular={regular.verdict}",
            )
    return verdict


def classify(
    module: FinModule,
    limits: CapacityLimits | None = None,
    *,
    enforce: bool = True,
) -> ClassificationRecord:
    """
    Вычисляет четыре флага иерархии и прикладывает свидетелей к ложным флагам.

    :raises InvariantViolationError: Если ``enforce`` и нарушена импликация между флагами.
    :raises CapacityError: Из процедур перебора.
    """

    limits = limits or default_limits()
    verdicts: list[PropertyVerdict] = [
        is_injective_baer(module, limits),
        is_absolutely_pure(module, limits),
        is_quasi_injective(module, limits),
        is_absolutely_self_pure(module, limits),
    ]
    injective, absolutely_pure, quasi_injective, absolutely_self_pure = (v.verdict for v in verdicts)

    record = ClassificationRecord(
        module=module.label,
        ring=module.ring.label,
        order=module.order,
        injective=injective,
        absolutely_pure=absolutely_pure,
        quasi_injective=quasi_injective,
        absolutely_self_pure=absolutely_self_pure,
        witnesses={v.property: v.failure for v in verdicts if v.failure is not None},
        notes=[FINITE_REDUCTION_NOTE, FG_VACUOUS_NOTE]
        + ([] if module.ring.is_finite else [INTEGER_BOUND_NOTE]),
    )

    broken = hierarchy_violations(record)
    if broken and enforce:
        raise InvariantViolationError(f"{module.label}: {'; '.join(broken)}")

    logger.debug("Module classified", module=module.label, ring=module.ring.label, flags=record.flags)
    return record


def hierarchy_violations(record: ClassificationRecord) -> list[str]:
    """
    Нарушенные импликации между флагами записи.
    """

    broken: list[str] = []
    if record.injective and not all(record.flags):
        broken.append("injective does not imply the other flags")
    if record.quasi_injective and not record.absolutely_self_pure:
        broken.append("quasi_injective without absolutely_self_pure")
    if record.absolutely_pure and not record.absolutely_self_pure:
        broken.append("absolutely_pure without absolutely_self_pure")
    return broken

