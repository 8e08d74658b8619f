from abc import (
    ABC,
    abstractmethod,
)
from typing import (
    Any,
    Iterable,
    Iterator,
)

import numpy as np

from app.domain.algebra.exceptions import (
    AxiomError,
    DimensionMismatchError,
    StructureValidationError,
)
from app.domain.algebra.homs import IdealHom
from app.domain.algebra.ideals import LeftIdeal
from app.domain.algebra.modules import (
    FinModule,
    ModHom,
    Submodule,
)
from app.domain.algebra.rings import RingTable
from app.domain.algebra.schemas import (
    AxiomViolation,
    ValidationReport,
)


def _require(ok: np.ndarray, axiom: str, detail: str) -> Iterator[AxiomViolation]:
    """
    Нарушение со свидетелем - первым (в каноническом порядке) индексом, где ``ok`` ложно.
    """

    failed = np.argwhere(~ok)
    if failed.size:
        witness = [int(i) for i in failed[0]]
        yield AxiomViolation(axiom=axiom, witness=witness, detail=detail.format(*witness))


class Validator(ABC):
    """
    Проверка группы аксиом.

    ``violations`` перечисляет все нарушенные аксиомы группы, по одному свидетелю
    на аксиому. Вызов валидатора либо ничего не возвращает, либо выбрасывает
    ``AxiomError`` с первым нарушением.
    """

    @abstractmethod
    def violations(self, structure: Any) -> Iterator[AxiomViolation]: ...

    def __call__(self, structure: Any) -> None:
        for violation in self.violations(structure):
            raise AxiomError(violation)


class AbelianGroupValidator(Validator):
    """
    Аксиомы абелевой группы для таблицы сложения ``add`` с нулем ``zero``.
    """

    def violations(self, structure: RingTable | FinModule) -> Iterator[AxiomViolation]:
        add, zero = structure.add, structure.zero
        n = np.arange(add.shape[0])

        yield from _require(add[zero, n] == n, "add_identity", "0 + {0} != {0}")
        yield from _require(add == add.T, "add_commutative", "{0} + {1} != {1} + {0}")
        yield from _require(
            add[add[:, :, None], n[None, None, :]] == add[n[:, None, None], add[None, :, :]],
            "add_associative",
            "({0} + {1}) + {2} != {0} + ({1} + {2})",
        )
        yield from _require((add == zero).any(axis=1), "add_inverse", "{0} has no additive inverse")


class RingMultiplicationValidator(Validator):
    """
    Ассоциативность умножения, двусторонняя единица и дистрибутивность.
    """

    def violations(self, ring: RingTable) -> Iterator[AxiomViolation]:
        add, mul, one = ring.add, ring.mul, ring.one
        n = np.arange(ring.order)

        yield from _require(
            (mul[one, n] == n) & (mul[n, one] == n),
            "mul_identity",
            "1·{0} or {0}·1 differs from {0}",
        )
        yield from _require(
            mul[mul[:, :, None], n[None, None, :]] == mul[n[:, None, None], mul[None, :, :]],
            "mul_associative",
            "({0}·{1})·{2} != {0}·({1}·{2})",
        )
        yield from _require(
            mul[n[:, None, None], add[None, :, :]]
            == add[mul[:, :, None], mul[:, None, :]],
            "left_distributive",
            "{0}·({1} + {2}) != {0}·{1} + {0}·{2}",
        )
        yield from _require(
            mul[add[:, :, None], n[None, None, :]]
            == add[mul[:, None, :], mul[None, :, :]],
            "right_distributive",
            "({0} + {1})·{2} != {0}·{2} + {1}·{2}",
        )


class ActionValidator(Validator):
    """
    Аксиомы скалярного действия конечного кольца на модуле.
    """

    def violations(self, module: FinModule) -> Iterator[AxiomViolation]:
        if module.action is None:
            return
        ring: RingTable = module.ring
        action, add = module.action, module.add
        m = np.arange(module.order)
        r = np.arange(ring.order)

        yield from _require(action[ring.one, m] == m, "action_unital", "1·{0} != {0}")
        yield from _require(
            action[:, add] == add[action[:, :, None], action[:, None, :]],
            "action_additive_in_module",
            "{0}·({1} + {2}) != {0}·{1} + {0}·{2}",
        )
        yield from _require(
            action[ring.add[:, :, None], m[None, None, :]]
            == add[action[:, None, :], action[None, :, :]],
            "action_additive_in_ring",
            "({0} + {1})·{2} != {0}·{2} + {1}·{2}",
        )
        yield from _require(
            action[ring.mul[:, :, None], m[None, None, :]]
            == action[r[:, None, None], action[None, :, :]],
            "action_associative",
            "({0}·{1})·{2} != {0}·({1}·{2})",
        )


class SubmoduleValidator(Validator):
    """
    Замкнутость подмножества относительно сложения и действия.
    """

    def violations(self, sub: Submodule) -> Iterator[AxiomViolation]:
        parent: FinModule = sub.parent
        elements = sub.array

        yield from _require(np.array([sub.mask[parent.zero]]), "contains_zero", "zero is missing")
        sums = parent.add[np.ix_(elements, elements)]
        yield from _require(sub.mask[sums], "closed_under_addition", "sum of elements #{0} and #{1} escapes")
        if parent.action is not None:
            yield from _require(
                sub.mask[parent.action[:, elements]],
                "closed_under_action",
                "ring element {0} moves element #{1} out",
            )


class LeftIdealValidator(Validator):
    """
    Замкнутость идеала конечного кольца относительно сложения и левого умножения.
    """

    def violations(self, ideal: LeftIdeal) -> Iterator[AxiomViolation]:
        if not ideal.is_finite:
            return
        ring: RingTable = ideal.ring
        elements = ideal.array

        yield from _require(np.array([ideal.mask[ring.zero]]), "contains_zero", "zero is missing")
        yield from _require(
            ideal.mask[ring.add[np.ix_(elements, elements)]],
            "closed_under_addition",
            "sum of elements #{0} and #{1} escapes",
        )
        yield from _require(
            ideal.mask[ring.mul[:, elements]],
            "closed_under_left_multiplication",
            "ring element {0} moves element #{1} out",
        )


class IdealHomValidator(Validator):
    """
    Аддитивность и R-линейность отображения из идеала.
    """

    def violations(self, f: IdealHom) -> Iterator[AxiomViolation]:
        module: FinModule = f.codomain
        if not f.domain.is_finite:
            if f.domain.gen == 0:
                yield from _require(
                    np.array([f.value == module.zero]),
                    "zero_ideal_maps_to_zero",
                    "the zero ideal has a nonzero image",
                )
            return

        broken = list(LeftIdealValidator().violations(f.domain))
        if broken:
            yield from broken
            return
        ring: RingTable = f.domain.ring
        elements = f.domain.array
        table = f.table

        yield from _require(
            table[ring.add[np.ix_(elements, elements)]]
            == module.add[table[elements][:, None], table[elements][None, :]],
            "additive",
            "f(#{0} + #{1}) != f(#{0}) + f(#{1})",
        )
        yield from _require(
            table[ring.mul[:, elements]] == module.action[:, table[elements]],
            "linear",
            "f({0}·l) != {0}·f(l) for l = element #{1}",
        )


class ModHomValidator(Validator):
    """
    Аддитивность и согласованность с действием гомоморфизма модулей.
    """

    def violations(self, f: ModHom) -> Iterator[AxiomViolation]:
        source, target, table = f.domain, f.codomain, f.table

        yield from _require(
            table[source.add] == target.add[table[:, None], table[None, :]],
            "additive",
            "f({0} + {1}) != f({0}) + f({1})",
        )
        if source.action is not None:
            yield from _require(
                table[source.action] == target.action[:, table],
                "equivariant",
                "f({0}·{1}) != {0}·f({1})",
            )


class ChainValidator(Validator):
    """
    Выполняет проверки последовательно и собирает все нарушения.
    """

    def __init__(
        self,
        validators: Iterable[Validator] | None = None,
        *,
        stop_on_first_error: bool = False,
    ):
        super().__init__()
        self._validators: list[Validator] = list(validators or [])
        self.stop_on_first_error = stop_on_first_error

    def add(self, validator: Validator) -> None:
        self._validators.append(validator)

    def violations(self, structure: Any) -> Iterator[AxiomViolation]:
        for validator in self._validators:
            yield from validator.violations(structure)

    def __call__(self, structure: Any) -> tuple[bool, list[AxiomError]]:
        """
        :raises AxiomError: Первое нарушение, если ``stop_on_first_error``.
        """

        errors: list[AxiomError] = []
        for violation in self.violations(structure):
            if self.stop_on_first_error:
                raise AxiomError(violation)
            errors.append(AxiomError(violation))
        return len(errors) == 0, errors


def _chain_for(structure: Any) -> tuple[str, str, ChainValidator]:
    if isinstance(structure, RingTable):
        return (
            "ring",
            structure.label,
            ChainValidator([AbelianGroupValidator(), RingMultiplicationValidator()]),
        )
    if isinstance(structure, FinModule):
        return (
            "module",
            structure.label,
            ChainValidator([AbelianGroupValidator(), ActionValidator()]),
        )
    if isinstance(structure, Submodule):
        return "submodule", f"{structure.label} ≤ {structure.parent.label}", ChainValidator([SubmoduleValidator()])
    if isinstance(structure, LeftIdeal):
        return "left_ideal", structure.label, ChainValidator([LeftIdealValidator()])
    if isinstance(structure, IdealHom):
        return "ideal_hom", repr(structure), ChainValidator([IdealHomValidator()])
    if isinstance(structure, ModHom):
        return "module_hom", repr(structure), ChainValidator([ModHomValidator()])
    raise DimensionMismatchError(f"Cannot validate {type(structure).__name__}")


def validate(structure: RingTable | FinModule | Submodule | LeftIdeal | IdealHom | ModHom) -> ValidationReport:
    """
    Проверяет все аксиомы структуры полным перебором таблиц.

    Несогласованные размерности отвергаются конструкторами (``DimensionMismatchError``)
    до вызова; здесь собираются только нарушения аксиом, по одному свидетелю на аксиому.
    """

    kind, label, chain = _chain_for(structure)
    _, errors = chain(structure)
    return ValidationReport(
        structure=label,
        kind=kind,
        violations=[e.violation for e in errors],
    )


def ensure_valid(structure: Any) -> ValidationReport:
    """
    :raises StructureValidationError: Если отчет проверки не пуст.
    """

    report = validate(structure)
    if not report.ok:
        raise StructureValidationError(report=report)
    return report


