from typing import Iterable

import numpy as np

from app.core.config import (
    CapacityLimits,
    default_limits,
)
from app.domain.algebra.modules import (
    FinModule,
    Submodule,
)
from app.domain.algebra.rings import check_index
from app.exceptions.base import check_capacity


def sum_submodules(module: FinModule, first: np.ndarray, second: np.ndarray) -> np.ndarray:
    """
    Сумма двух подмодулей, заданных массивами элементов.
    """

    return np.unique(module.add[np.ix_(first, second)])


def span(module: FinModule, seeds: Iterable[int]) -> np.ndarray:
    """
    Наименьший подмодуль, содержащий ``seeds``.

    :raises DimensionMismatchError: Если индекс вне [0, |M|).
    """

    current = np.array([module.zero], dtype=np.intp)
    for seed in seeds:
        x = check_index(seed, module.order, "span seed")
        if not (current == x).any():
            current = sum_submodules(module, current, module.cyclic_spans[x])
    return current


def greedy_generators(module: FinModule, elements: Iterable[int]) -> list[int]:
    """
    Жадный набор образующих: по возрастанию индекса добавляется каждый элемент,
    не лежащий в подмодуле, порожденном уже выбранными.
    """

    generators: list[int] = []
    current = np.array([module.zero], dtype=np.intp)
    for x in sorted(int(e) for e in elements):
        if (current == x).any():
            continue
        generators.append(x)
        current = sum_submodules(module, current, module.cyclic_spans[x])
    return generators


def submodules(
    module: FinModule,
    limits: CapacityLimits | None = None,
) -> list[Submodule]:
    """
    Все подмодули модуля по возрастанию порядка, затем лексикографически.

    :raises CapacityError: Если порядок модуля больше ``module_order``.
    """

    limits = limits or default_limits()
    check_capacity("module_order", limits.module_order, module.order)
    return list(module.lattice)


def intersection(first: Submodule, second: Submodule) -> Submodule:
    return Submodule(first.parent, np.intersect1d(first.array, second.array))


def submodule_sum(first: Submodule, second: Submodule) -> Submodule:
    return Submodule(first.parent, sum_submodules(first.parent, first.array, second.array))


def complements(
    sub: Submodule,
    limits: CapacityLimits | None = None,
) -> list[Submodule]:
    """
    Все подмодули C с ``sub ∩ C = 0`` и ``sub + C = parent``.
    """

    parent: FinModule = sub.parent
    result: list[Submodule] = []
    for candidate in submodules(parent, limits):
        if sub.order * candidate.order != parent.order:
            continue
        if np.intersect1d(sub.array, candidate.array).size == 1:
            result.append(candidate)
    return result


def direct_complement(
    sub: Submodule,
    limits: CapacityLimits | None = None,
) -> Submodule | None:
    """
    Первое (в каноническом порядке) прямое дополнение или None.
    """

    found = complements(sub, limits)
    return found[0] if found else None
