from app.core.config import CapacityLimits
from app.domain.algebra import (
    FinModule,
    LeftIdeal,
    UnsupportedRingError,
    annihilator,
    left_ideals,
)
from app.domain.filters.schemas import AnnFilter
from app.utils.numbers import divisors


def annihilators(module: FinModule) -> list[LeftIdeal]:
    """
    Различные аннуляторы элементов модуля в порядке первого появления.
    """

    found: dict[LeftIdeal, None] = {}
    for m in range(module.order):
        found.setdefault(annihilator(module, m), None)
    return list(found)


def omega(
    module: FinModule,
    limits: CapacityLimits | None = None,
) -> list[LeftIdeal]:
    """
    Ω(M): левые идеалы, содержащие аннулятор хотя бы одного элемента.

    Над Z результат конечен: {nZ : n | exp(M)}, так как в конечной абелевой группе
    есть элемент порядка exp(M).
    """

    if not module.ring.is_finite:
        return [LeftIdeal(module.ring, gen=n) for n in divisors(module.exponent)]

    anns = annihilators(module)
    return [ideal for ideal in left_ideals(module.ring, limits) if any(a <= ideal for a in anns)]


def filter_closure(module: FinModule) -> AnnFilter:
    """
    Ω̄(M) через базу: неподвижная точка попарных пересечений аннуляторов.
    Над Z фильтр задается экспонентой модуля (1 для нулевого модуля).
    """

    if not module.ring.is_finite:
        return AnnFilter(ring=module.ring, module=module.label, exponent=module.exponent)

    base: set[LeftIdeal] = set(annihilators(module))
    pending: list[LeftIdeal] = list(base)
    while pending:
        current = pending.pop()
        for other in list(base):
            meet = current.intersection(other)
            if meet not in base:
                base.add(meet)
                pending.append(meet)

    ordered = sorted(base, key=lambda ideal: (ideal.order, ideal.elements))
    return AnnFilter(ring=module.ring, module=module.label, base=tuple(ordered))


def filter_contains(flt: AnnFilter, ideal: LeftIdeal) -> bool:
    """
    Принадлежность идеала фильтру.

    Над Z: nZ ∈ Ω̄(M) тогда и только тогда, когда n >= 1 и n | exp(M); нулевой идеал
    не принадлежит фильтру конечного модуля.

    :raises UnsupportedRingError: Если идеал задан над другим кольцом.
    """

    if ideal.ring != flt.ring:
        raise UnsupportedRingError(f"{ideal.label} is not an ideal of {flt.ring.label}")

    if flt.exponent is not None:
        return ideal.gen >= 1 and flt.exponent % ideal.gen == 0
    return flt.base[0] <= ideal
