from itertools import combinations
from typing import Iterator

import numpy as np

from app.core import (
    logger,
    settings,
)
from app.core.config import (
    CapacityLimits,
    default_limits,
)
from app.domain.algebra import (
    FinModule,
    RingTable,
    Submodule,
    direct_sum,
    greedy_generators,
    make_cyclic_ring,
    regular_module,
    require_finite,
)
from app.domain.algebra.homs import extend_assignment
from app.domain.algebra.lattice import sum_submodules
from app.domain.purity.schemas import (
    EquationSystem,
    FpFailure,
    OracleResult,
)
from app.exceptions.base import check_capacity


def evaluation_table(coefficients: np.ndarray, add: np.ndarray, rank: int) -> np.ndarray:
    """
    Таблица ``val[r, x] = Σ_j r_j·x_j`` для r ∈ R^rank и x ∈ M^rank.

    Индексы кортежей - смешанная система счисления, первая компонента старшая
    (как у ``direct_sum``). ``coefficients[r, m] = r·m``.
    """

    val = coefficients
    for _ in range(1, rank):
        val = add[val[:, None, :, None], coefficients[None, :, None, :]]
        val = val.reshape(val.shape[0] * val.shape[1], val.shape[2] * val.shape[3])
    return val


def power_indices(elements: np.ndarray, base: int, rank: int) -> np.ndarray:
    """
    Индексы всех кортежей из ``elements^rank`` внутри ``base^rank``.
    """

    indices = elements
    for _ in range(1, rank):
        indices = (indices[:, None] * base + elements[None, :]).ravel()
    return indices


def digits(index: int, base: int, rank: int) -> list[int]:
    result: list[int] = []
    for _ in range(rank):
        index, digit = divmod(index, base)
        result.append(int(digit))
    return result[::-1]


def _free_module(ring: RingTable, rank: int, limits: CapacityLimits) -> FinModule:
    oracle_limits = limits.model_copy(update={"direct_sum_order": limits.oracle_space})
    return direct_sum([regular_module(ring)] * rank, limits=oracle_limits).module


def _variables(rank: int) -> list[str]:
    return ["x"] if rank == 1 else [f"x{j + 1}" for j in range(rank)]


def _render_row(coefficients: list[int], one: int, variables: list[str]) -> str:
    terms: list[str] = []
    for coefficient, variable in zip(coefficients, variables):
        if coefficient == 0:
            continue
        terms.append(variable if coefficient == one else f"{coefficient}{variable}")
    return " + ".join(terms) or "0"


def bounded_equational_purity(
    sub: Submodule,
    max_vars: int | None = None,
    max_eqs: int | None = None,
    limits: CapacityLimits | None = None,
) -> OracleResult:
    """
    Ищет систему Σ_j r_ij x_j = a_i (a_i ∈ A, не больше ``max_eqs`` уравнений от
    ``max_vars`` переменных), разрешимую в B и неразрешимую в A.

    Для каждого x ∈ B^v \\ A^v множество N_x = {r ∈ R^v : r·x ∈ A} - подмодуль R^v,
    и система по всем строкам N_x эквивалентна системе по его образующим. Если жадных
    образующих больше ``max_eqs``, проверяются их подмножества размера ``max_eqs``.
    Над Z коэффициенты берутся по модулю exp(B).

    :raises CapacityError: Если R^v или B^v больше ``oracle_space``.
    """

    limits = limits or default_limits()
    max_vars = max_vars or settings.oracle.max_vars
    max_eqs = max_eqs or settings.oracle.max_eqs
    ambient: FinModule = sub.parent

    if ambient.ring.is_finite:
        coefficient_ring: RingTable = ambient.ring
        coefficients = ambient.action
    else:
        coefficient_ring = make_cyclic_ring(ambient.exponent)
        coefficients = ambient.coefficient_table(ambient.exponent)

    result = OracleResult(
        oracle="equational_purity",
        subject=f"{sub.label} ≤ {ambient.label}",
        bounds={"max_vars": max_vars, "max_eqs": max_eqs},
    )

    searched: int = 0
    for rank in range(1, max_vars + 1):
        check_capacity("oracle_space", limits.oracle_space, coefficient_ring.order**rank)
        check_capacity("oracle_space", limits.oracle_space, ambient.order**rank)

        rows_module: FinModule = _free_module(coefficient_ring, rank, limits)
        val = evaluation_table(coefficients, ambient.add, rank)
        inside = power_indices(sub.array, ambient.order, rank)
        inside_mask = np.zeros(val.shape[1], dtype=bool)
        inside_mask[inside] = True

        generators_cache: dict[bytes, list[int]] = {}
        for x in range(val.shape[1]):
            if inside_mask[x]:
                continue
            admissible = np.flatnonzero(sub.mask[val[:, x]])
            key = admissible.tobytes()
            if key not in generators_cache:
                generators_cache[key] = greedy_generators(rows_module, admissible)
            generators = generators_cache[key]
            if not generators:
                continue

            searched += 1
            if len(generators) <= max_eqs:
                candidates = [tuple(generators)]
            else:
                candidates = list(combinations(generators, max_eqs))

            for rows in candidates:
                rows_array = np.array(rows, dtype=np.intp)
                targets = val[rows_array, x]
                solvable = (val[np.ix_(rows_array, inside)] == targets[:, None]).all(axis=0)
                if solvable.any():
                    continue

                equation = _equation(ambient, coefficient_ring, rows, x, rank, targets)
                logger.debug("Equation witness found", subject=result.subject, system=equation.rendered)
                return result.model_copy(update={"searched": searched, "equation": equation})

    logger.debug("No equation witness within bounds", subject=result.subject, searched=searched)
    return result.model_copy(update={"searched": searched})


def _equation(
    ambient: FinModule,
    coefficient_ring: RingTable,
    rows: tuple[int, ...],
    x: int,
    rank: int,
    targets: np.ndarray,
) -> EquationSystem:
    coefficient_rows = [digits(row, coefficient_ring.order, rank) for row in rows]
    variables = _variables(rank)
    rendered = "; ".join(
        f"{_render_row(coefficient_row, coefficient_ring.one, variables)} = {ambient.element_label(int(a))}"
        for coefficient_row, a in zip(coefficient_rows, targets)
    )
    return EquationSystem(
        coefficients=coefficient_rows,
        constants=[int(a) for a in targets],
        solution=digits(x, ambient.order, rank),
        rendered=rendered,
    )


def bounded_spans(module: FinModule, max_gens: int) -> list[np.ndarray]:
    """
    Ненулевые подмодули, порожденные не более чем ``max_gens`` элементами,
    по возрастанию порядка, затем лексикографически.
    """

    spans: dict[bytes, np.ndarray] = {}
    for span in module.cyclic_spans:
        spans.setdefault(span.tobytes(), span)
    cyclic = list(spans.values())

    found: dict[tuple[int, ...], np.ndarray] = {}
    frontier: list[np.ndarray] = [np.array([module.zero], dtype=np.intp)]
    for _ in range(max_gens):
        following: list[np.ndarray] = []
        for current in frontier:
            for span in cyclic:
                joined = sum_submodules(module, current, span)
                key = tuple(int(e) for e in joined)
                if len(key) > 1 and key not in found:
                    found[key] = joined
                    following.append(joined)
        frontier = following

    return [found[key] for key in sorted(found, key=lambda k: (len(k), k))]


def _generator_images(
    source: FinModule,
    target: FinModule,
    generators: list[int],
) -> Iterator[tuple[int, ...]]:
    """
    Образы образующих для всех гомоморфизмов span(generators) → target.
    """

    start = np.full(source.order, -1, dtype=np.intp)
    start[source.zero] = target.zero

    def backtrack(depth: int, covered: np.ndarray, table: np.ndarray) -> Iterator[tuple[int, ...]]:
        if depth == len(generators):
            yield tuple(int(table[g]) for g in generators)
            return
        g: int = generators[depth]
        for v in range(target.order):
            extended = extend_assignment(
                source.add, target.add, covered, table, source.action[:, g], target.action[:, v]
            )
            if extended is not None:
                yield from backtrack(depth + 1, np.flatnonzero(extended >= 0), extended)

    yield from backtrack(0, np.array([source.zero], dtype=np.intp), start)


def bounded_fp_oracle(
    module: FinModule,
    max_rank: int | None = None,
    max_gens: int | None = None,
    limits: CapacityLimits | None = None,
) -> OracleResult:
    """
    Ищет конечно порожденный K ≤ R^k (k <= ``max_rank``, не больше ``max_gens``
    образующих) и гомоморфизм K → A, не продолжающийся на R^k.

    Гомоморфизм продолжается тогда и только тогда, когда он совпадает на образующих
    с вычислением r ↦ Σ_j r_j·y_j для некоторого y ∈ A^k.

    :raises UnsupportedRingError: Для модулей над Z.
    :raises CapacityError: Если R^k или A^k больше ``oracle_space``.
    """

    ring: RingTable = require_finite(module.ring, "bounded_fp_oracle")
    limits = limits or default_limits()
    max_rank = max_rank or settings.oracle.max_rank
    max_gens = max_gens or settings.oracle.max_gens

    result = OracleResult(
        oracle="fp_injectivity",
        subject=module.label,
        bounds={"max_rank": max_rank, "max_gens": max_gens},
    )

    searched: int = 0
    for rank in range(1, max_rank + 1):
        check_capacity("oracle_space", limits.oracle_space, ring.order**rank)
        check_capacity("oracle_space", limits.oracle_space, module.order**rank)

        free: FinModule = _free_module(ring, rank, limits)
        val = evaluation_table(module.action, module.add, rank)

        for span in bounded_spans(free, max_gens):
            generators = greedy_generators(free, span)
            reachable = {tuple(int(v) for v in column) for column in val[generators, :].T}
            for images in _generator_images(free, module, generators):
                searched += 1
                if images in reachable:
                    continue

                failure = FpFailure(
                    rank=rank,
                    generators=[digits(g, ring.order, rank) for g in generators],
                    images=list(images),
                    rendered=", ".join(
                        f"{free.element_label(g)} ↦ {module.element_label(v)}"
                        for g, v in zip(generators, images)
                    ),
                )
                logger.debug("Non-extendable map found", subject=module.label, witness=failure.rendered)
                return result.model_copy(update={"searched": searched, "fp_failure": failure})

    return result.model_copy(update={"searched": searched})
