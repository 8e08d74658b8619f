from typing import Iterator

import numpy as np

from app.core.config import CapacityLimits
from app.domain.algebra import (
    BaseRing,
    FinModule,
    IdealHom,
    LeftIdeal,
    left_ideals,
)
from app.domain.purity.schemas import ExtensionWitness
from app.utils.numbers import divisors


def extends_to_ring(f: IdealHom) -> ExtensionWitness | None:
    """
    Ищет m с l·m = f(l) для всех l ∈ L (наименьший индекс).

    Над Z для L = nZ условие сводится к n·m = f(n).
    """

    module: FinModule = f.codomain
    if f.table is None:
        n: int = f.domain.gen
        if n == 0:
            return ExtensionWitness(hom=f, element=module.zero) if f.value == module.zero else None
        candidates = np.flatnonzero(module.multiples[n % module.exponent] == f.value)
    else:
        elements = f.domain.array
        images = f.table[elements]
        candidates = np.flatnonzero((module.action[elements, :] == images[:, None]).all(axis=0))

    if candidates.size == 0:
        return None
    return ExtensionWitness(hom=f, element=int(candidates[0]))


def ideal_scope(
    ring: BaseRing,
    bound: int,
    limits: CapacityLimits | None = None,
    *,
    integer_sweep: int | None = None,
) -> Iterator[LeftIdeal]:
    """
    Идеалы, по которым квантифицируют критерии продолжения.

    Конечное кольцо: все левые идеалы (все они конечно порождены). Z: 0Z и nZ для n | bound;
    для остальных n ядро (n·ord(a))Z не лежит в фильтре с экспонентой bound, кроме
    нулевого отображения, которое всегда продолжается. ``integer_sweep`` заменяет
    границу полным перебором n = 0..integer_sweep.
    """

    if ring.is_finite:
        yield from left_ideals(ring, limits)
        return

    if integer_sweep is not None:
        gens = range(integer_sweep + 1)
    else:
        gens = [0] + divisors(bound)
    for n in gens:
        yield LeftIdeal(ring, gen=n)
