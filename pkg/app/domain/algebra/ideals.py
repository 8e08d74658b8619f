from functools import cached_property
from math import lcm
from typing import Iterable

import numpy as np

from app.core.config import (
    CapacityLimits,
    default_limits,
)
from app.domain.algebra.constructions import regular_module
from app.domain.algebra.exceptions import (
    InvalidConstructionError,
    UnsupportedRingError,
)
from app.domain.algebra.lattice import submodules
from app.domain.algebra.modules import (
    FinModule,
    Submodule,
)
from app.domain.algebra.rings import (
    BaseRing,
    RingTable,
    check_index,
    require_finite,
)
from app.exceptions.base import check_capacity


class LeftIdeal:
    """
    Левый идеал базового кольца.

    Над конечным кольцом хранится множество элементов, над Z - образующая n >= 0
    идеала nZ (n = 0 - нулевой идеал, n = 1 - все кольцо).
    """

    def __init__(
        self,
        ring: BaseRing,
        elements: Iterable[int] | None = None,
        gen: int | None = None,
    ):
        self.ring: BaseRing = ring
        if isinstance(ring, RingTable):
            if elements is None:
                raise InvalidConstructionError("An ideal of a finite ring is given by its elements")
            unique = sorted({check_index(e, ring.order, "ideal element") for e in elements})
            self.elements: tuple[int, ...] | None = tuple(unique)
            self.gen: int | None = None
        else:
            if gen is None or gen < 0:
                raise InvalidConstructionError(f"An ideal of Z needs a generator n >= 0, got {gen}")
            self.elements = None
            self.gen = int(gen)

    @property
    def is_finite(self) -> bool:
        return self.elements is not None

    @property
    def order(self) -> int:
        """
        Число элементов; только для конечного кольца.
        """

        if self.elements is None:
            raise UnsupportedRingError("Ideals of Z are infinite")
        return len(self.elements)

    @property
    def is_zero(self) -> bool:
        if self.elements is not None:
            return len(self.elements) == 1
        return self.gen == 0

    @property
    def is_whole(self) -> bool:
        if self.elements is not None:
            return len(self.elements) == self.ring.order
        return self.gen == 1

    @cached_property
    def array(self) -> np.ndarray:
        array = np.array(self.elements, dtype=np.intp)
        array.setflags(write=False)
        return array

    @cached_property
    def mask(self) -> np.ndarray:
        mask = np.zeros(self.ring.order, dtype=bool)
        mask[self.array] = True
        mask.setflags(write=False)
        return mask

    def __contains__(self, x: int) -> bool:
        if self.elements is not None:
            return bool(self.mask[x])
        if self.gen == 0:
            return x == 0
        return x % self.gen == 0

    def __le__(self, other: "LeftIdeal") -> bool:
        if self.elements is not None:
            return bool(other.mask[self.array].all())
        if self.gen == 0:
            return True
        if other.gen == 0:
            return False
        return self.gen % other.gen == 0

    def intersection(self, other: "LeftIdeal") -> "LeftIdeal":
        if self.elements is not None:
            return LeftIdeal(self.ring, np.intersect1d(self.array, other.array))
        if self.gen == 0 or other.gen == 0:
            return LeftIdeal(self.ring, gen=0)
        return LeftIdeal(self.ring, gen=lcm(self.gen, other.gen))

    @property
    def _key(self) -> tuple:
        return self.ring, self.elements, self.gen

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LeftIdeal) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    @property
    def label(self) -> str:
        if self.is_zero:
            return "0"
        if self.is_whole:
            return self.ring.label
        if self.elements is None:
            return f"{self.gen}Z"
        return "{" + ",".join(str(e) for e in self.elements) + "}"

    def __repr__(self) -> str:
        return f"LeftIdeal({self.label} ≤ {self.ring.label})"

    def as_submodule(self) -> Submodule:
        ring: RingTable = require_finite(self.ring, "LeftIdeal.as_submodule")
        return Submodule(regular_module(ring), self.elements, label=self.label)


def left_ideals(
    ring: BaseRing,
    limits: CapacityLimits | None = None,
) -> list[LeftIdeal]:
    """
    Все левые идеалы конечного кольца, по возрастанию порядка, затем лексикографически.

    :raises UnsupportedRingError: Для кольца Z.
    :raises CapacityError: Если порядок кольца больше ``ring_order``.
    """

    ring = require_finite(ring, "left_ideals")
    limits = limits or default_limits()
    check_capacity("ring_order", limits.ring_order, ring.order)
    return [
        LeftIdeal(ring, sub.elements)
        for sub in submodules(regular_module(ring), limits.model_copy(update={"module_order": ring.order}))
    ]


def principal_ideal(ring: BaseRing, x: int) -> LeftIdeal:
    """
    Главный левый идеал R·x; над Z - идеал |x|Z.
    """

    if isinstance(ring, RingTable):
        check_index(x, ring.order, "element")
        return LeftIdeal(ring, np.unique(ring.mul[:, x]))
    return LeftIdeal(ring, gen=abs(int(x)))


def annihilator(module: FinModule, m: int) -> LeftIdeal:
    """
    Аннулятор элемента: {r : r·m = 0}; над Z - идеал, порожденный аддитивным порядком.
    """

    check_index(m, module.order, "element")
    if module.action is not None:
        return LeftIdeal(module.ring, np.flatnonzero(module.action[:, m] == module.zero))
    return LeftIdeal(module.ring, gen=int(module.additive_orders[m]))


def ideal_module(ideal: LeftIdeal) -> FinModule:
    """
    Левый идеал конечного кольца как модуль.
    """

    return ideal.as_submodule().module
