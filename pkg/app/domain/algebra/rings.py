from abc import (
    ABC,
    abstractmethod,
)
from functools import cached_property
from typing import Any

import numpy as np

from app.domain.algebra.exceptions import (
    DimensionMismatchError,
    InvalidConstructionError,
    UnsupportedRingError,
)


def as_table(
    data: Any,
    name: str,
    shape: tuple[int, ...],
    bound: int,
) -> np.ndarray:
    """
    Приводит таблицу операции к неизменяемому массиву индексов и проверяет размерность.

    :param data: Вложенные списки или массив.
    :param name: Имя таблицы для сообщения об ошибке.
    :param shape: Ожидаемая форма.
    :param bound: Все значения должны лежать в ``[0, bound)``.

    :return: Массив ``np.intp`` только для чтения.
    :raises DimensionMismatchError: Если форма или диапазон значений не совпадают.
    """

    try:
        table = np.array(data, dtype=np.intp)
    except (TypeError, ValueError) as e:
        raise DimensionMismatchError(f"Table '{name}' is not rectangular", debug_message=str(e))

    if table.shape != shape:
        raise DimensionMismatchError(
            f"Table '{name}' has shape {table.shape}, expected {shape}",
        )
    if table.size and (table.min() < 0 or table.max() >= bound):
        raise DimensionMismatchError(
            f"Table '{name}' has entries outside [0, {bound})",
        )
    table.setflags(write=False)
    return table


def check_index(value: int, bound: int, name: str) -> int:
    if not 0 <= int(value) < bound:
        raise DimensionMismatchError(f"{name} = {value} is outside [0, {bound})")
    return int(value)


class BaseRing(ABC):
    """
    Базовое кольцо модуля: конечное кольцо, заданное таблицами, или кольцо целых чисел.
    """

    label: str

    @property
    @abstractmethod
    def is_finite(self) -> bool: ...

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.label})"


class RingTable(BaseRing):
    """
    Конечное ассоциативное кольцо с единицей, заданное таблицами сложения и умножения
    на множестве индексов ``0..order-1``.

    Конструктор проверяет только размерности; аксиомы проверяет ``validate``.
    """

    def __init__(
        self,
        add: Any,
        mul: Any,
        zero: int,
        one: int,
        label: str = "R",
    ):
        add_array = np.asarray(add)
        if add_array.ndim != 2 or add_array.shape[0] == 0:
            raise DimensionMismatchError("Ring addition table must be a non-empty square table")
        order: int = add_array.shape[0]

        self.order: int = order
        self.add: np.ndarray = as_table(add, "add", (order, order), order)
        self.mul: np.ndarray = as_table(mul, "mul", (order, order), order)
        self.zero: int = check_index(zero, order, "zero")
        self.one: int = check_index(one, order, "one")
        self.label: str = label

    @property
    def is_finite(self) -> bool:
        return True

    @cached_property
    def neg(self) -> np.ndarray:
        """
        Таблица противоположных элементов; -1 там, где обратного нет.
        """

        hits = self.add == self.zero
        neg = np.where(hits.any(axis=1), hits.argmax(axis=1), -1)
        neg.setflags(write=False)
        return neg

    def multiple(self, k: int, x: int) -> int:
        """
        Кратное ``k·x`` = x + ... + x (k раз), k >= 0.
        """

        acc: int = self.zero
        for _ in range(k):
            acc = int(self.add[acc, x])
        return acc

    @cached_property
    def characteristic(self) -> int:
        """
        Аддитивный порядок единицы.
        """

        acc: int = self.one
        for k in range(1, self.order + 1):
            if acc == self.zero:
                return k
            acc = int(self.add[acc, self.one])
        return 0

    @cached_property
    def _key(self) -> tuple:
        return self.order, self.zero, self.one, self.add.tobytes(), self.mul.tobytes()

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RingTable) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __getstate__(self) -> dict:
        state = self.__dict__.copy()
        for cached in ("neg", "characteristic", "_key"):
            state.pop(cached, None)
        return state


class IntegerRing(BaseRing):
    """
    Кольцо целых чисел. Элементы не перечисляются: идеалы задаются образующей nZ, n >= 0.
    """

    label: str = "Z"

    @property
    def is_finite(self) -> bool:
        return False

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntegerRing)

    def __hash__(self) -> int:
        return hash("Z")


INTEGERS = IntegerRing()


def require_finite(ring: BaseRing, operation: str) -> RingTable:
    """
    :raises UnsupportedRingError: Если кольцо не конечное.
    """

    if not isinstance(ring, RingTable):
        raise UnsupportedRingError(f"{operation} requires a finite ring, got {ring.label}")
    return ring


def make_cyclic_ring(n: int) -> RingTable:
    """
    Кольцо вычетов Z_n.

    :raises InvalidConstructionError: Если n < 1.
    """

    if n < 1:
        raise InvalidConstructionError(f"Z_n requires n >= 1, got {n}")

    elements = np.arange(n)
    return RingTable(
        add=(elements[:, None] + elements[None, :]) % n,
        mul=(elements[:, None] * elements[None, :]) % n,
        zero=0,
        one=1 % n,
        label=f"Z_{n}",
    )


def make_product_ring(first: BaseRing, second: BaseRing) -> RingTable:
    """
    Прямое произведение двух конечных колец с покомпонентными операциями.
    Элемент (a, b) имеет индекс ``a * |second| + b``.

    :raises UnsupportedRingError: Если один из сомножителей - кольцо целых чисел.
    """

    r1: RingTable = require_finite(first, "make_product_ring")
    r2: RingTable = require_finite(second, "make_product_ring")
    n2: int = r2.order

    a = np.arange(r1.order * n2) // n2
    b = np.arange(r1.order * n2) % n2

    def combine(t1: np.ndarray, t2: np.ndarray) -> np.ndarray:
        return t1[a[:, None], a[None, :]] * n2 + t2[b[:, None], b[None, :]]

    return RingTable(
        add=combine(r1.add, r2.add),
        mul=combine(r1.mul, r2.mul),
        zero=r1.zero * n2 + r2.zero,
        one=r1.one * n2 + r2.one,
        label=f"{r1.label}×{r2.label}",
    )


def idempotents(ring: RingTable) -> list[int]:
    """
    Все идемпотенты e·e = e по возрастанию индекса.
    """

    diagonal = ring.mul[np.arange(ring.order), np.arange(ring.order)]
    return [int(e) for e in np.flatnonzero(diagonal == np.arange(ring.order))]
