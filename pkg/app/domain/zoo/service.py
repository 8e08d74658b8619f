import re
from typing import Iterator

import numpy as np

from app.core import logger
from app.core.config import (
    CapacityLimits,
    default_limits,
)
from app.domain.algebra import (
    INTEGERS,
    BaseRing,
    FinModule,
    InvalidConstructionError,
    RingTable,
    Submodule,
    abelian_group,
    direct_sum,
    greedy_generators,
    is_module_iso,
    is_ring_iso,
    isomorphism_invariant,
    make_cyclic_ring,
    make_product_ring,
    power,
    quotient,
    regular_module,
    submodules,
)
from app.domain.zoo.schemas import ZooScope
from app.exceptions.base import check_capacity
from app.utils.numbers import invariant_factors


_CYCLIC_SPEC = re.compile(r"^Z_?(\d+)$")


def parse_ring_spec(spec: str) -> BaseRing:
    """
    Разбирает спецификацию кольца: ``integers`` (или ``Z``), ``Z4`` / ``Z_4``,
    произведения через ``x`` или ``×``: ``Z2xZ3``.

    :raises InvalidConstructionError: Если спецификация не распознана.
    """

    text = spec.strip()
    if text.lower() in {"integers", "z"}:
        return INTEGERS

    factors: list[RingTable] = []
    for part in re.split(r"[x×]", text):
        match = _CYCLIC_SPEC.match(part.strip())
        if match is None:
            raise InvalidConstructionError(f"Unrecognized ring spec {spec!r}")
        factors.append(make_cyclic_ring(int(match.group(1))))

    ring: RingTable = factors[0]
    for factor in factors[1:]:
        ring = make_product_ring(ring, factor)
    return ring


def ring_catalog(
    max_order: int,
    limits: CapacityLimits | None = None,
) -> list[BaseRing]:
    """
    Кольца Z_n (n <= max_order), попарные произведения Z_a × Z_b (2 <= a <= b,
    ab <= max_order) и кольцо Z последним.

    :raises CapacityError: Если ``max_order`` больше ``ring_order``.
    """

    limits = limits or default_limits()
    check_capacity("ring_order", limits.ring_order, max_order)

    rings: list[BaseRing] = [make_cyclic_ring(n) for n in range(1, max_order + 1)]
    pairs = sorted(
        ((a, b) for a in range(2, max_order + 1) for b in range(a, max_order + 1) if a * b <= max_order),
        key=lambda pair: (pair[0] * pair[1], pair),
    )
    rings.extend(make_product_ring(make_cyclic_ring(a), make_cyclic_ring(b)) for a, b in pairs)
    rings.append(INTEGERS)
    return rings


def ring_isomorphism_notes(rings: list[BaseRing]) -> list[str]:
    """
    Пары изоморфных конечных колец каталога, например ``Z_6 ≅ Z_2×Z_3``.
    """

    finite = [ring for ring in rings if isinstance(ring, RingTable)]
    notes: list[str] = []
    for i, first in enumerate(finite):
        for second in finite[i + 1 :]:
            if first.order == second.order and is_ring_iso(first, second) is not None:
                notes.append(f"{first.label} ≅ {second.label}")
    return notes


class _IsoCatalog:
    """
    Список попарно неизоморфных модулей с корзинами по инварианту.
    """

    def __init__(self):
        self.modules: list[FinModule] = []
        self._buckets: dict[tuple, list[FinModule]] = {}

    def add(self, module: FinModule) -> bool:
        bucket = self._buckets.setdefault(isomorphism_invariant(module), [])
        if any(is_module_iso(module, other) is not None for other in bucket):
            return False
        bucket.append(module)
        self.modules.append(module)
        return True


def _span_label(free: FinModule, sub: Submodule, ring: RingTable) -> str:
    if sub.order == 1:
        return "0"
    if sub.order == free.order:
        return free.label
    generators = greedy_generators(free, sub.elements)
    if len(generators) == 1 and free.names is None and "×" not in ring.label:
        return f"{generators[0]}{ring.label}"
    inner = ",".join(free.element_label(g) for g in generators)
    return f"⟨{inner}⟩≤{free.label}"


def _finite_candidates(
    ring: RingTable,
    cap: int,
    free_rank_cap: int,
    limits: CapacityLimits,
) -> Iterator[FinModule]:
    for rank in range(1, free_rank_cap + 1):
        free: FinModule = regular_module(ring) if rank == 1 else power(regular_module(ring), rank, limits)
        for sub in submodules(free, limits):
            labelled = Submodule(free, sub.elements, label=_span_label(free, sub, ring))
            if labelled.order <= cap:
                yield labelled.module
            if labelled.order > 1 and free.order // labelled.order <= cap:
                yield quotient(free, labelled).module


def module_zoo(
    ring: BaseRing,
    cap: int,
    free_rank_cap: int = 2,
    limits: CapacityLimits | None = None,
) -> list[FinModule]:
    """
    Попарно неизоморфные модули порядка не больше ``cap``.

    Над Z - все абелевы группы по наборам инвариантных множителей. Над конечным
    кольцом - подмодули и фактормодули R^k (k <= ``free_rank_cap``) и их прямые суммы,
    замкнутые до неподвижной точки. Порядок: по возрастанию порядка модуля, затем
    в порядке обнаружения.

    :raises CapacityError: Если R^k не помещается в ``module_order``.
    """

    limits = limits or default_limits()

    if not ring.is_finite:
        return [
            abelian_group(factors)
            for n in range(1, cap + 1)
            for factors in invariant_factors(n)
        ]

    catalog = _IsoCatalog()
    for module in _finite_candidates(ring, cap, free_rank_cap, limits):
        catalog.add(module)

    tried: set[tuple[int, int]] = set()
    grown = True
    while grown:
        grown = False
        current = list(catalog.modules)
        for i, first in enumerate(current):
            for j in range(i, len(current)):
                second = current[j]
                if (i, j) in tried:
                    continue
                tried.add((i, j))
                if first.is_zero or second.is_zero or first.order * second.order > cap:
                    continue
                if catalog.add(direct_sum([first, second], limits=limits).module):
                    grown = True

    ordered = sorted(enumerate(catalog.modules), key=lambda item: (item[1].order, item[0]))
    modules = [module for _, module in ordered]
    logger.debug("Module zoo generated", ring=ring.label, cap=cap, size=len(modules))
    return modules


def random_supplements(
    modules: list[FinModule],
    count: int,
    seed: int,
    max_order: int,
    limits: CapacityLimits | None = None,
) -> list[FinModule]:
    """
    Случайные прямые суммы двух-трех модулей зоопарка порядка не больше ``max_order``,
    не изоморфные друг другу и исходным модулям. Воспроизводимы при фиксированном ``seed``.
    """

    limits = limits or default_limits()
    candidates = [module for module in modules if not module.is_zero]
    if count <= 0 or not candidates:
        return []

    catalog = _IsoCatalog()
    for module in modules:
        catalog.add(module)

    rng = np.random.default_rng(seed)
    added: list[FinModule] = []
    attempts: int = 0
    while len(added) < count and attempts < 20 * count:
        attempts += 1
        size = int(rng.integers(2, 4))
        picked = [candidates[int(i)] for i in rng.integers(0, len(candidates), size=size)]
        if np.prod([module.order for module in picked]) > min(max_order, limits.direct_sum_order):
            continue
        module = direct_sum(picked, limits=limits).module
        if catalog.add(module):
            added.append(module)
    return added


def scope_modules(
    scope: ZooScope,
    limits: CapacityLimits | None = None,
) -> dict[str, list[FinModule]]:
    """
    Зоопарк для каждого кольца области: ключ - спецификация кольца.
    """

    limits = limits or default_limits()
    result: dict[str, list[FinModule]] = {}
    for spec in scope.rings:
        ring = parse_ring_spec(spec)
        modules = module_zoo(ring, scope.module_order_cap, scope.free_rank_cap, limits)
        if scope.random_supplements:
            modules = modules + random_supplements(
                modules,
                scope.random_supplements,
                scope.seed,
                2 * scope.module_order_cap,
                limits,
            )
        result[spec] = modules
    return result


def chains(
    module: FinModule,
    depth: int,
    limits: CapacityLimits | None = None,
) -> list[tuple[Submodule, ...]]:
    """
    Все строго возрастающие цепочки подмодулей A_1 ⊊ ... ⊊ A_k, k <= ``depth``,
    в лексикографическом порядке индексов решетки.
    """

    lattice: list[Submodule] = submodules(module, limits)
    result: list[tuple[Submodule, ...]] = []

    def extend(chain: tuple[int, ...]) -> None:
        result.append(tuple(lattice[i] for i in chain))
        if len(chain) == depth:
            return
        last: Submodule = lattice[chain[-1]]
        for j in range(chain[-1] + 1, len(lattice)):
            candidate = lattice[j]
            if candidate.order > last.order and last <= candidate:
                extend(chain + (j,))

    for i in range(len(lattice)):
        extend((i,))
    return result
