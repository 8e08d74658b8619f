from itertools import product

import numpy as np

from app.domain.algebra import (
    FinModule,
    InvalidConstructionError,
    Submodule,
    kernel,
    validate,
)
from app.domain.filters import (
    AnnFilter,
    filter_closure,
    filter_contains,
)
from app.domain.purity.extension import extends_to_ring
from app.domain.purity.schemas import (
    EquationSystem,
    ExtensionFailure,
    ExtensionWitness,
    PurityVerdict,
)


def revalidate_extension(witness: ExtensionWitness) -> bool:
    """
    Проверяет l·m = f(l) для всех l идеала независимо от поиска.
    """

    f = witness.hom
    module: FinModule = f.codomain
    if f.table is None:
        return module.scalar(f.domain.gen, witness.element) == f.value
    elements = f.domain.array
    return bool((module.action[elements, witness.element] == f.table[elements]).all())


def revalidate_failure(
    failure: ExtensionFailure,
    flt: AnnFilter | None = None,
    sub: Submodule | None = None,
) -> bool:
    """
    Независимая перепроверка пары (L, f) из свидетеля.

    Отображение f: L → A корректно, L и ядро совпадают с заявленными, ядро лежит в ``flt``
    (если фильтр задан), и продолжения f до R → A нет. Для относительного свидетеля
    (задан ``sub``) элемент объемлющего модуля должен продолжать f до R → B.

    :param failure: Проверяемый свидетель.
    :param flt: Фильтр, которому должно принадлежать ядро.
    :param sub: Подмодуль A ≤ B относительной проверки.
    """

    f = failure.hom
    if not validate(f).ok:
        return False
    if failure.ideal != f.domain or failure.kernel != kernel(f):
        return False
    if flt is not None and not filter_contains(flt, failure.kernel):
        return False
    if sub is not None:
        b = failure.ambient_element
        if f.codomain is not sub.module or b is None or not 0 <= b < sub.parent.order:
            return False
        if not revalidate_extension(ExtensionWitness(hom=f.then(sub.inclusion), element=b)):
            return False
    return extends_to_ring(f) is None


def revalidate_complement(sub: Submodule, complement: Submodule) -> bool:
    """
    Дополнение - подмодуль с нулевым пересечением и полной суммой.
    """

    if not validate(complement).ok or complement.parent is not sub.parent:
        return False
    parent: FinModule = sub.parent
    if np.intersect1d(sub.array, complement.array).size != 1:
        return False
    return np.unique(parent.add[np.ix_(sub.array, complement.array)]).size == parent.order


def revalidate_equation(sub: Submodule, system: EquationSystem) -> bool:
    """
    Решение удовлетворяет системе в B, и ни один кортеж из A^v ей не удовлетворяет.
    """

    ambient: FinModule = sub.parent
    rank: int = len(system.solution)
    coefficients = (
        ambient.action if ambient.action is not None else ambient.coefficient_table()
    )
    base: int = coefficients.shape[0]

    def evaluate(row: list[int], x: tuple[int, ...]) -> int:
        acc: int = ambient.zero
        for r, value in zip(row, x):
            acc = int(ambient.add[acc, coefficients[r % base, value]])
        return acc

    def solves(x: tuple[int, ...]) -> bool:
        return all(evaluate(row, x) == a for row, a in zip(system.coefficients, system.constants))

    if not all(a in sub for a in system.constants):
        return False
    if not solves(tuple(system.solution)):
        return False
    return not any(solves(y) for y in product(sub.elements, repeat=rank))


def revalidate_verdict(sub: Submodule, verdict: PurityVerdict, test_module: FinModule | None = None) -> bool:
    """
    Независимая перепроверка свидетеля вердикта чистоты.

    :param sub: Подмодуль A ≤ B, для которого вынесен вердикт.
    :param verdict: Проверяемый вердикт.
    :param test_module: Тестовый модуль M для M-чистоты; для самочистоты M = A.
    :raises InvalidConstructionError: Если для вердикта M-чистоты не задан M.
    """

    if verdict.complement is not None:
        return verdict.verdict and revalidate_complement(sub, verdict.complement)
    if verdict.equation is not None:
        return not verdict.verdict and revalidate_equation(sub, verdict.equation)
    if verdict.failure is not None:
        if test_module is None and verdict.property == "M-pure":
            raise InvalidConstructionError("An M-pure verdict is revalidated against its test module")
        flt = filter_closure(test_module if test_module is not None else sub.module)
        return not verdict.verdict and revalidate_failure(verdict.failure, flt, sub)
    return True
