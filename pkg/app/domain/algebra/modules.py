from functools import cached_property
from typing import Any

import numpy as np

from app.domain.algebra.exceptions import (
    DimensionMismatchError,
    StructureValidationError,
    UnsupportedRingError,
)
from app.domain.algebra.rings import (
    BaseRing,
    RingTable,
    as_table,
    check_index,
)
from app.utils.numbers import lcm_all


class FinModule:
    """
    Конечный левый модуль над базовым кольцом.

    Элементы - индексы ``0..order-1``. Для конечного кольца действие задано таблицей
    ``action[r, m] = r·m`` размера ``ring.order × order``; над Z действие выводится из
    повторного сложения и таблицы не имеет.

    Конструктор проверяет только размерности; аксиомы проверяет ``validate``.
    """

    def __init__(
        self,
        ring: BaseRing,
        add: Any,
        zero: int,
        action: Any = None,
        label: str = "M",
        names: tuple[str, ...] | None = None,
    ):
        add_array = np.asarray(add)
        if add_array.ndim != 2 or add_array.shape[0] == 0:
            raise DimensionMismatchError("Module addition table must be a non-empty square table")
        order: int = add_array.shape[0]

        self.ring: BaseRing = ring
        self.order: int = order
        self.add: np.ndarray = as_table(add, "add", (order, order), order)
        self.zero: int = check_index(zero, order, "zero")
        self.label: str = label

        if isinstance(ring, RingTable):
            if action is None:
                raise DimensionMismatchError("A module over a finite ring needs an action table")
            self.action: np.ndarray | None = as_table(
                action, "action", (ring.order, order), order
            )
        else:
            if action is not None:
                raise DimensionMismatchError("Integers act by repeated addition, no action table expected")
            self.action = None

        if names is not None and len(names) != order:
            raise DimensionMismatchError(f"Expected {order} element names, got {len(names)}")
        self.names: tuple[str, ...] | None = names

    def __repr__(self) -> str:
        return f"FinModule({self.label} over {self.ring.label}, order={self.order})"

    @property
    def is_zero(self) -> bool:
        return self.order == 1

    def element_label(self, x: int) -> str:
        if self.names is not None:
            return self.names[x]
        return str(x)

    @cached_property
    def neg(self) -> np.ndarray:
        hits = self.add == self.zero
        neg = np.where(hits.any(axis=1), hits.argmax(axis=1), -1)
        neg.setflags(write=False)
        return neg

    @cached_property
    def additive_orders(self) -> np.ndarray:
        """
        Аддитивный порядок каждого элемента; 0, если за ``order`` шагов ноль не достигнут
        (возможно только для таблицы, не являющейся группой).
        """

        elements = np.arange(self.order)
        orders = np.zeros(self.order, dtype=np.intp)
        acc = elements.copy()
        for k in range(1, self.order + 1):
            reached = (acc == self.zero) & (orders == 0)
            orders[reached] = k
            acc = self.add[acc, elements]
        orders.setflags(write=False)
        return orders

    @cached_property
    def exponent(self) -> int:
        """
        НОК аддитивных порядков; 1 для нулевого модуля.
        """

        orders = self.additive_orders
        if (orders == 0).any():
            return 0
        return lcm_all([int(o) for o in np.unique(orders)])

    @cached_property
    def multiples(self) -> np.ndarray:
        """
        Таблица кратных ``multiples[k, m] = k·m`` для k = 0..exponent-1.
        """

        if self.exponent == 0:
            raise StructureValidationError(f"{self.label}: addition table is not a group")

        elements = np.arange(self.order)
        rows = np.empty((self.exponent, self.order), dtype=np.intp)
        rows[0] = self.zero
        for k in range(1, self.exponent):
            rows[k] = self.add[rows[k - 1], elements]
        rows.setflags(write=False)
        return rows

    def coefficient_table(self, modulus: int | None = None) -> np.ndarray:
        """
        Таблица скалярного действия, строки которой индексированы коэффициентами.

        Для конечного кольца это ``action`` (строки - элементы кольца). Над Z строка k
        содержит ``k·m``; коэффициенты берутся по модулю ``modulus`` (по умолчанию
        экспонента модуля), который должен делиться на экспоненту.
        """

        if self.action is not None:
            return self.action
        modulus = modulus or self.exponent
        return self.multiples[np.arange(modulus) % self.exponent]

    def scalar(self, r: int, m: int) -> int:
        """
        Произведение ``r·m``. Над Z ``r`` - произвольное целое число.
        """

        if self.action is not None:
            return int(self.action[r, m])
        return int(self.multiples[r % self.exponent, m])

    @cached_property
    def cyclic_spans(self) -> tuple[np.ndarray, ...]:
        """
        Циклические подмодули ``R·m`` для каждого элемента (отсортированные массивы).
        """

        table = self.coefficient_table()
        return tuple(np.unique(table[:, m]) for m in range(self.order))

    @cached_property
    def lattice(self) -> tuple["Submodule", ...]:
        """
        Все подмодули, отсортированные по (порядок, элементы).

        Обход в ширину от нулевого подмодуля: каждый шаг добавляет циклический подмодуль
        элемента, не лежащего в текущем. Без проверки ограничений; см. ``submodules``.
        """

        spans: list[np.ndarray] = []
        seen_spans: set[bytes] = set()
        for span in self.cyclic_spans:
            key = span.tobytes()
            if key not in seen_spans:
                seen_spans.add(key)
                spans.append(span)

        start: tuple[int, ...] = (self.zero,)
        found: set[tuple[int, ...]] = {start}
        frontier: list[np.ndarray] = [np.array(start, dtype=np.intp)]

        while frontier:
            following: list[np.ndarray] = []
            for current in frontier:
                mask = np.zeros(self.order, dtype=bool)
                mask[current] = True
                for span in spans:
                    if mask[span].all():
                        continue
                    joined = np.unique(self.add[np.ix_(current, span)])
                    key = tuple(int(e) for e in joined)
                    if key not in found:
                        found.add(key)
                        following.append(joined)
            frontier = following

        ordered = sorted(found, key=lambda elements: (len(elements), elements))
        return tuple(Submodule(self, elements) for elements in ordered)

    def __getstate__(self) -> dict:
        state = self.__dict__.copy()
        for cached in ("cyclic_spans", "multiples", "neg", "lattice"):
            state.pop(cached, None)
        return state


def require_same_ring(*modules: FinModule) -> BaseRing:
    """
    :raises UnsupportedRingError: Если модули заданы над разными кольцами.
    """

    ring: BaseRing = modules[0].ring
    for module in modules[1:]:
        if module.ring != ring:
            raise UnsupportedRingError(
                f"{module.label} is over {module.ring.label}, expected {ring.label}",
            )
    return ring


def coefficient_tables(*modules: FinModule) -> list[np.ndarray]:
    """
    Таблицы действия с общей индексацией коэффициентов: строка r в каждой таблице
    соответствует одному и тому же скаляру. Над Z берутся вычеты по НОК экспонент.
    """

    ring: BaseRing = require_same_ring(*modules)
    if ring.is_finite:
        return [module.action for module in modules]
    modulus: int = lcm_all([module.exponent for module in modules])
    return [module.coefficient_table(modulus) for module in modules]


class Submodule:
    """
    Подмножество элементов модуля-родителя, замкнутое относительно сложения и действия.

    Конструктор не проверяет замкнутость; это делает ``validate``.
    """

    def __init__(
        self,
        parent: FinModule,
        elements: Any,
        label: str | None = None,
    ):
        unique: list[int] = sorted({int(e) for e in elements})
        for e in unique:
            check_index(e, parent.order, "submodule element")

        self.parent: FinModule = parent
        self.elements: tuple[int, ...] = tuple(unique)
        self.label: str = label or self._default_label()

    def _default_label(self) -> str:
        if len(self.elements) == self.parent.order:
            return self.parent.label
        if len(self.elements) <= 8:
            return "{" + ",".join(self.parent.element_label(e) for e in self.elements) + "}"
        return f"<{len(self.elements)} elements of {self.parent.label}>"

    def __repr__(self) -> str:
        return f"Submodule({self.label} ≤ {self.parent.label})"

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def array(self) -> np.ndarray:
        array = np.array(self.elements, dtype=np.intp)
        array.setflags(write=False)
        return array

    @cached_property
    def mask(self) -> np.ndarray:
        mask = np.zeros(self.parent.order, dtype=bool)
        mask[self.array] = True
        mask.setflags(write=False)
        return mask

    @cached_property
    def local_index(self) -> np.ndarray:
        local = np.full(self.parent.order, -1, dtype=np.intp)
        local[self.array] = np.arange(len(self.elements))
        local.setflags(write=False)
        return local

    def __contains__(self, x: int) -> bool:
        return bool(self.mask[x])

    def __le__(self, other: "Submodule") -> bool:
        return self.parent is other.parent and bool(other.mask[self.array].all())

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Submodule)
            and self.parent is other.parent
            and self.elements == other.elements
        )

    def __hash__(self) -> int:
        return hash((id(self.parent), self.elements))

    @cached_property
    def module(self) -> FinModule:
        """
        Подмодуль как самостоятельный модуль: локальный индекс i соответствует
        ``elements[i]`` родителя, имена элементов наследуются.

        :raises StructureValidationError: Если подмножество не замкнуто.
        """

        parent: FinModule = self.parent
        elements: np.ndarray = self.array
        local: np.ndarray = self.local_index

        add = local[parent.add[np.ix_(elements, elements)]]
        if (add < 0).any() or local[parent.zero] < 0:
            raise StructureValidationError(f"{self.label} is not closed in {parent.label}")

        action = None
        if parent.action is not None:
            action = local[parent.action[:, elements]]
            if (action < 0).any():
                raise StructureValidationError(
                    f"{self.label} is not closed under the action on {parent.label}",
                )

        return FinModule(
            ring=parent.ring,
            add=add,
            zero=int(local[parent.zero]),
            action=action,
            label=self.label,
            names=tuple(parent.element_label(e) for e in self.elements),
        )

    def as_module(self) -> FinModule:
        return self.module

    @cached_property
    def inclusion(self) -> "ModHom":
        return ModHom(self.module, self.parent, self.array)

    def within(self, other: "Submodule") -> "Submodule":
        """
        Этот подмодуль как подмодуль модуля ``other.as_module()``.

        :raises StructureValidationError: Если подмодуль не содержится в ``other``.
        """

        if not self <= other:
            raise StructureValidationError(f"{self.label} is not contained in {other.label}")
        return Submodule(other.module, other.local_index[self.array], label=self.label)


class ModHom:
    """
    Гомоморфизм конечных модулей, заданный полной таблицей образов.
    """

    def __init__(
        self,
        domain: FinModule,
        codomain: FinModule,
        table: Any,
    ):
        self.domain: FinModule = domain
        self.codomain: FinModule = codomain
        self.table: np.ndarray = as_table(table, "map", (domain.order,), codomain.order)

    def __repr__(self) -> str:
        return f"ModHom({self.domain.label} → {self.codomain.label})"

    def __call__(self, x: int) -> int:
        return int(self.table[x])

    def compose(self, after: "ModHom") -> "ModHom":
        """
        Композиция ``after ∘ self``.
        """

        if after.domain is not self.codomain:
            raise UnsupportedRingError("Composed maps do not match")
        return ModHom(self.domain, after.codomain, after.table[self.table])

    @property
    def is_bijective(self) -> bool:
        return self.domain.order == self.codomain.order and len(np.unique(self.table)) == self.domain.order

    def describe(self) -> dict[str, str]:
        return {
            self.domain.element_label(x): self.codomain.element_label(int(y))
            for x, y in enumerate(self.table)
        }
