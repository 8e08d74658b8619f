from typing import (
    Iterator,
    Sequence,
)

import numpy as np

from app.core.config import (
    CapacityLimits,
    default_limits,
)
from app.domain.algebra.constructions import regular_module
from app.domain.algebra.exceptions import (
    DimensionMismatchError,
    UnsupportedRingError,
)
from app.domain.algebra.ideals import LeftIdeal
from app.domain.algebra.lattice import greedy_generators
from app.domain.algebra.modules import (
    FinModule,
    ModHom,
    coefficient_tables,
    require_same_ring,
)
from app.domain.algebra.rings import (
    INTEGERS,
    RingTable,
    check_index,
)
from app.exceptions.base import check_capacity


class IdealHom:
    """
    Гомоморфизм из левого идеала в модуль.

    Над конечным кольцом задан образами всех элементов идеала (в порядке
    ``domain.elements``). Над Z задан одним элементом ``value = f(gen)``.
    """

    def __init__(
        self,
        domain: LeftIdeal,
        codomain: FinModule,
        images: Sequence[int] | None = None,
        value: int | None = None,
    ):
        if domain.ring != codomain.ring:
            raise UnsupportedRingError(
                f"Ideal of {domain.ring.label} mapped into a module over {codomain.ring.label}",
            )
        self.domain: LeftIdeal = domain
        self.codomain: FinModule = codomain

        if domain.is_finite:
            if images is None or len(images) != domain.order:
                raise DimensionMismatchError(
                    f"Expected {domain.order} images for {domain.label}",
                )
            table = np.full(domain.ring.order, -1, dtype=np.intp)
            table[domain.array] = [check_index(v, codomain.order, "image") for v in images]
            table.setflags(write=False)
            self.table: np.ndarray | None = table
            self.value: int | None = None
        else:
            if value is None:
                raise DimensionMismatchError("A map from an ideal of Z is given by f(gen)")
            self.table = None
            self.value = check_index(value, codomain.order, "image")

    @property
    def images(self) -> tuple[int, ...]:
        if self.table is None:
            return (self.value,)
        return tuple(int(v) for v in self.table[self.domain.array])

    def __call__(self, element: int) -> int:
        """
        Образ элемента идеала. Над Z ``element`` - целое число, кратное образующей.
        """

        if element not in self.domain:
            raise DimensionMismatchError(f"{element} is not in {self.domain.label}")
        if self.table is not None:
            return int(self.table[element])
        if self.domain.gen == 0:
            return self.codomain.zero
        return self.codomain.scalar(element // self.domain.gen, self.value)

    @property
    def is_zero(self) -> bool:
        return all(v == self.codomain.zero for v in self.images)

    def then(self, g: ModHom) -> "IdealHom":
        """
        Композиция ``g ∘ f``.
        """

        if g.domain is not self.codomain:
            raise DimensionMismatchError("Composed maps do not match")
        if self.table is None:
            return IdealHom(self.domain, g.codomain, value=g(self.value))
        return IdealHom(self.domain, g.codomain, images=g.table[np.array(self.images)])

    @property
    def generator_images(self) -> list[tuple[int, int]]:
        """
        Пары (образующая, образ) по жадным образующим идеала.
        """

        if self.table is None:
            return [(self.domain.gen, self.value)]
        ring: RingTable = self.domain.ring
        generators = greedy_generators(regular_module(ring), self.domain.elements)
        return [(g, int(self.table[g])) for g in generators]

    @property
    def label(self) -> str:
        if self.is_zero:
            return "0"
        return ", ".join(
            f"{g} ↦ {self.codomain.element_label(v)}" for g, v in self.generator_images
        )

    def __repr__(self) -> str:
        return f"IdealHom({self.domain.label} → {self.codomain.label}: {self.label})"


def extend_assignment(
    source_add: np.ndarray,
    target_add: np.ndarray,
    covered: np.ndarray,
    table: np.ndarray,
    keys: np.ndarray,
    values: np.ndarray,
) -> np.ndarray | None:
    """
    Продолжает частичный гомоморфизм, заданный на подмодуле ``covered``, на сумму
    ``covered + R·g``, где ``keys[r] = r·g`` и ``values[r] = r·v``.

    Отображение ``d + r·g ↦ f(d) + r·v`` является гомоморфизмом тогда и только тогда,
    когда оно корректно определено; корректность проверяется одним присваиванием.

    :return: Новая таблица или None при конфликте.
    """

    targets = source_add[covered[:, None], keys[None, :]]
    images = target_add[table[covered][:, None], values[None, :]]
    extended = table.copy()
    extended[targets] = images
    if not (extended[targets] == images).all():
        return None
    return extended


def iter_homs(
    ideal: LeftIdeal,
    module: FinModule,
    limits: CapacityLimits | None = None,
) -> Iterator[IdealHom]:
    """
    Перечисляет все гомоморфизмы ``ideal → module`` в каноническом порядке
    (лексикографически по образам жадных образующих).

    :raises CapacityError: Если у идеала больше ``generators`` образующих.
    """

    if ideal.ring != module.ring:
        raise UnsupportedRingError(f"{ideal.label} and {module.label} are over different rings")

    if not ideal.is_finite:
        if ideal.gen == 0:
            yield IdealHom(ideal, module, value=module.zero)
            return
        for a in range(module.order):
            yield IdealHom(ideal, module, value=a)
        return

    limits = limits or default_limits()
    ring: RingTable = ideal.ring
    generators: list[int] = greedy_generators(regular_module(ring), ideal.elements)
    check_capacity("generators", limits.generators, len(generators))

    start = np.full(ring.order, -1, dtype=np.intp)
    start[ring.zero] = module.zero

    def backtrack(depth: int, covered: np.ndarray, table: np.ndarray) -> Iterator[np.ndarray]:
        if depth == len(generators):
            yield table
            return
        g: int = generators[depth]
        keys = ring.mul[:, g]
        for v in range(module.order):
            extended = extend_assignment(
                ring.add, module.add, covered, table, keys, module.action[:, v]
            )
            if extended is not None:
                yield from backtrack(depth + 1, np.flatnonzero(extended >= 0), extended)

    for table in backtrack(0, np.array([ring.zero], dtype=np.intp), start):
        yield IdealHom(ideal, module, images=table[ideal.array])


def hom_set(
    ideal: LeftIdeal,
    module: FinModule,
    limits: CapacityLimits | None = None,
) -> list[IdealHom]:
    return list(iter_homs(ideal, module, limits))


def kernel(f: IdealHom) -> LeftIdeal:
    """
    Ядро гомоморфизма как левый идеал. Над Z: ker(f) = (gen · ord(f(gen)))Z.
    """

    domain: LeftIdeal = f.domain
    if f.table is None:
        if domain.gen == 0:
            return LeftIdeal(domain.ring, gen=0)
        order = int(f.codomain.additive_orders[f.value])
        return LeftIdeal(domain.ring, gen=domain.gen * order)
    kept = [e for e, v in zip(domain.elements, f.images) if v == f.codomain.zero]
    return LeftIdeal(domain.ring, kept)


def _profile(module: FinModule, tables: np.ndarray) -> list[bytes]:
    """
    Инвариант элемента: аддитивный порядок и маска аннулятора в общей индексации
    коэффициентов.
    """

    killed = tables == module.zero
    return [
        int(module.additive_orders[x]).to_bytes(4, "little") + np.packbits(killed[:, x]).tobytes()
        for x in range(module.order)
    ]


def isomorphism_invariant(module: FinModule) -> tuple:
    """
    Инвариант класса изоморфизма: порядок, экспонента и мультимножество профилей
    элементов. Над Z профили считаются по модулю экспоненты самого модуля.
    """

    return (
        module.order,
        module.exponent,
        tuple(sorted(_profile(module, module.coefficient_table()))),
    )


def iter_isomorphisms(source: FinModule, target: FinModule) -> Iterator[ModHom]:
    """
    Перечисляет изоморфизмы модулей перебором образов жадных образующих
    с отсечением по профилям элементов.
    """

    require_same_ring(source, target)
    if source.order != target.order or source.exponent != target.exponent:
        return

    source_coeffs, target_coeffs = coefficient_tables(source, target)
    source_profile = _profile(source, source_coeffs)
    target_profile = _profile(target, target_coeffs)
    if sorted(source_profile) != sorted(target_profile):
        return

    generators: list[int] = greedy_generators(source, range(source.order))
    start = np.full(source.order, -1, dtype=np.intp)
    start[source.zero] = target.zero

    def backtrack(depth: int, covered: np.ndarray, table: np.ndarray) -> Iterator[np.ndarray]:
        if depth == len(generators):
            yield table
            return
        g: int = generators[depth]
        for v in range(target.order):
            if target_profile[v] != source_profile[g]:
                continue
            extended = extend_assignment(
                source.add, target.add, covered, table, source_coeffs[:, g], target_coeffs[:, v]
            )
            if extended is None:
                continue
            reached = np.flatnonzero(extended >= 0)
            if len(np.unique(extended[reached])) != len(reached):
                continue
            yield from backtrack(depth + 1, reached, extended)

    for table in backtrack(0, np.array([source.zero], dtype=np.intp), start):
        yield ModHom(source, target, table)


def is_module_iso(source: FinModule, target: FinModule) -> ModHom | None:
    """
    Изоморфизм-свидетель или None. Для одного и того же объекта - тождественное отображение.
    """

    if source is target:
        return ModHom(source, target, np.arange(source.order))
    return next(iter_isomorphisms(source, target), None)


def is_ring_iso(first: RingTable, second: RingTable) -> np.ndarray | None:
    """
    Изоморфизм колец как таблица образов или None. Перебираются аддитивные
    изоморфизмы, сохраняющие единицу и умножение.
    """

    if first.order != second.order:
        return None

    def additive(ring: RingTable) -> FinModule:
        return FinModule(INTEGERS, ring.add, ring.zero, label=ring.label)

    for phi in iter_isomorphisms(additive(first), additive(second)):
        table = phi.table
        if table[first.one] != second.one:
            continue
        if (second.mul[table[:, None], table[None, :]] == table[first.mul]).all():
            return table
    return None


def identity(module: FinModule) -> ModHom:
    return ModHom(module, module, np.arange(module.order))

