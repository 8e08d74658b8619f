from functools import lru_cache
from math import prod
from typing import (
    NamedTuple,
    Sequence,
)

import numpy as np

from app.core.config import (
    CapacityLimits,
    default_limits,
)
from app.domain.algebra.exceptions import InvalidConstructionError
from app.domain.algebra.lattice import span
from app.domain.algebra.modules import (
    FinModule,
    ModHom,
    Submodule,
    require_same_ring,
)
from app.domain.algebra.rings import (
    INTEGERS,
    BaseRing,
    RingTable,
    make_product_ring,
    require_finite,
)
from app.exceptions.base import check_capacity


class DirectSum(NamedTuple):
    module: FinModule
    injections: list[ModHom]
    projections: list[ModHom]


class Quotient(NamedTuple):
    module: FinModule
    projection: ModHom


@lru_cache(maxsize=256)
def regular_module(ring: RingTable) -> FinModule:
    """
    Кольцо как левый модуль над собой. Элементы и индексы совпадают с элементами кольца,
    поэтому подмодули - это в точности левые идеалы.
    """

    return FinModule(
        ring=ring,
        add=ring.add,
        zero=ring.zero,
        action=ring.mul,
        label=ring.label,
    )


def zero_module(ring: BaseRing) -> FinModule:
    action = np.zeros((ring.order, 1), dtype=np.intp) if isinstance(ring, RingTable) else None
    return FinModule(ring, [[0]], 0, action, label="0")


def cyclic_group(n: int) -> FinModule:
    """
    Циклическая группа Z_n как модуль над Z.

    :raises InvalidConstructionError: Если n < 1.
    """

    if n < 1:
        raise InvalidConstructionError(f"Z_n requires n >= 1, got {n}")
    elements = np.arange(n)
    return FinModule(
        ring=INTEGERS,
        add=(elements[:, None] + elements[None, :]) % n,
        zero=0,
        label=f"Z_{n}" if n > 1 else "0",
    )


def cyclic_module(ring: BaseRing, d: int) -> FinModule:
    """
    Циклический модуль R/(d·1)R; над Z это Z_d.

    :raises InvalidConstructionError: Если d < 0 (или d < 1 над Z).
    """

    if not isinstance(ring, RingTable):
        return cyclic_group(d)
    if d < 0:
        raise InvalidConstructionError(f"cyclic_module requires d >= 0, got {d}")

    regular: FinModule = regular_module(ring)
    generator: int = ring.multiple(d, ring.one)
    ideal = Submodule(regular, span(regular, [generator]), label=f"{d}{ring.label}")
    if ideal.order == 1:
        return regular
    return quotient(regular, ideal).module


def abelian_group(orders: Sequence[int]) -> FinModule:
    """
    Прямая сумма циклических групп Z_{d_1} ⊕ ... ⊕ Z_{d_s} над Z.
    """

    if not orders:
        return zero_module(INTEGERS)
    return direct_sum([cyclic_group(d) for d in orders], ring=INTEGERS).module


def direct_sum(
    modules: Sequence[FinModule],
    *,
    ring: BaseRing | None = None,
    limits: CapacityLimits | None = None,
) -> DirectSum:
    """
    Внешняя прямая сумма модулей над одним кольцом.

    Индекс элемента (x_1, ..., x_k) - смешанная система счисления, в которой первая
    компонента старшая. Пустой список дает нулевой модуль над ``ring`` (по умолчанию Z).

    :raises CapacityError: Если порядок суммы больше ``direct_sum_order``.
    :raises UnsupportedRingError: Если модули заданы над разными кольцами.
    """

    limits = limits or default_limits()
    if not modules:
        zero = zero_module(ring or INTEGERS)
        return DirectSum(zero, [], [])

    base: BaseRing = require_same_ring(*modules)
    orders: list[int] = [module.order for module in modules]
    total: int = prod(orders)
    check_capacity("direct_sum_order", limits.direct_sum_order, total)

    weights: list[int] = [prod(orders[i + 1 :]) for i in range(len(orders))]
    indices = np.arange(total)
    components = [(indices // w) % o for w, o in zip(weights, orders)]

    add = np.zeros((total, total), dtype=np.intp)
    zero: int = 0
    action = np.zeros((base.order, total), dtype=np.intp) if base.is_finite else None
    for module, weight, comp in zip(modules, weights, components):
        add += module.add[comp[:, None], comp[None, :]] * weight
        zero += module.zero * weight
        if action is not None:
            action += module.action[:, comp] * weight

    if len(modules) == 1:
        names = modules[0].names
    else:
        names = tuple(
            "(" + ",".join(m.element_label(int(c[i])) for m, c in zip(modules, components)) + ")"
            for i in range(total)
        )

    result = FinModule(
        ring=base,
        add=add,
        zero=zero,
        action=action,
        label=" ⊕ ".join(module.label for module in modules),
        names=names,
    )

    injections: list[ModHom] = []
    projections: list[ModHom] = []
    for module, weight, comp in zip(modules, weights, components):
        offset: int = zero - module.zero * weight
        injections.append(ModHom(module, result, offset + np.arange(module.order) * weight))
        projections.append(ModHom(result, module, comp))

    return DirectSum(result, injections, projections)


def power(
    module: FinModule,
    k: int,
    limits: CapacityLimits | None = None,
) -> FinModule:
    """
    Прямая сумма k копий модуля, k >= 1.
    """

    if k < 1:
        raise InvalidConstructionError(f"power requires k >= 1, got {k}")
    result = direct_sum([module] * k, limits=limits).module
    result.label = module.label if k == 1 else f"({module.label})^{k}"
    return result


def quotient(module: FinModule, sub: Submodule) -> Quotient:
    """
    Фактормодуль по подмодулю. Класс смежности представлен наименьшим индексом,
    классы нумеруются по возрастанию представителя.
    """

    representatives = module.add[:, sub.array].min(axis=1)
    classes = np.unique(representatives)
    index = np.searchsorted(classes, representatives)

    action = None
    if module.action is not None:
        action = index[module.action[:, classes]]

    result = FinModule(
        ring=module.ring,
        add=index[module.add[np.ix_(classes, classes)]],
        zero=int(index[module.zero]),
        action=action,
        label=f"{module.label}/{sub.label}",
        names=tuple(module.element_label(int(c)) + "+" + sub.label for c in classes)
        if sub.order > 1
        else module.names,
    )
    return Quotient(result, ModHom(module, result, index))


def product_module(first: FinModule, second: FinModule) -> FinModule:
    """
    Модуль A × B над кольцом-произведением R1 × R2 с действием (r, s)(a, b) = (ra, sb).
    Элемент (a, b) имеет индекс ``a * |B| + b``, как и в ``make_product_ring``.
    """

    r1: RingTable = require_finite(first.ring, "product_module")
    r2: RingTable = require_finite(second.ring, "product_module")
    ring: RingTable = make_product_ring(r1, r2)

    n_b: int = second.order
    total: int = first.order * n_b
    a = np.arange(total) // n_b
    b = np.arange(total) % n_b
    r = np.arange(ring.order) // r2.order
    s = np.arange(ring.order) % r2.order

    return FinModule(
        ring=ring,
        add=first.add[a[:, None], a[None, :]] * n_b + second.add[b[:, None], b[None, :]],
        zero=first.zero * n_b + second.zero,
        action=first.action[r[:, None], a[None, :]] * n_b + second.action[s[:, None], b[None, :]],
        label=f"{first.label}×{second.label}",
        names=tuple(
            f"({first.element_label(int(x))},{second.element_label(int(y))})" for x, y in zip(a, b)
        ),
    )
