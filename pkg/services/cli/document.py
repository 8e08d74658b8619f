import json
from pathlib import Path
from typing import (
    Literal,
    Union,
)

from pydantic import (
    ConfigDict,
    Field,
    ValidationError,
)

from app import status
from app.core import logger
from app.core.config import (
    CapacityLimits,
    default_limits,
)
from app.domain.algebra import (
    INTEGERS,
    BaseRing,
    FinModule,
    LeftIdeal,
    RingTable,
    Submodule,
    ValidationReport,
    cyclic_module,
    direct_sum,
    ensure_valid,
    ideal_module,
    make_cyclic_ring,
    make_product_ring,
    quotient,
    regular_module,
    require_finite,
    span,
)
from app.exceptions.base import ApplicationError
from app.schemas import BaseSchema


class InputDocumentError(ApplicationError):
    """
    Документ не читается, не проходит схему или ссылается на неизвестные имена.
    """

    message = "Invalid input document"
    error_code = "input_document_invalid"
    exit_code = status.EXIT_VALIDATION_ERROR


class _Spec(BaseSchema):
    model_config = ConfigDict(extra="forbid")


class CyclicRingSpec(_Spec):
    cyclic: int = Field(gt=0)


class ProductRingSpec(_Spec):
    product: tuple[str, str]


class RingTableData(_Spec):
    add: list[list[int]]
    mul: list[list[int]]
    zero: int = 0
    one: int = 1


class TableRingSpec(_Spec):
    table: RingTableData
    label: str | None = None


RingSpec = Union[Literal["integers"], CyclicRingSpec, ProductRingSpec, TableRingSpec]


class ModuleTableData(_Spec):
    add: list[list[int]]
    zero: int = 0
    action: list[list[int]] | None = None
    names: list[str] | None = None


class TableModuleSpec(_Spec):
    ring: str
    table: ModuleTableData
    label: str | None = None


class CyclicModuleSpec(_Spec):
    """
    Прямая сумма циклических модулей R/(d·1)R; над Z - группа Z_{d_1} ⊕ ... ⊕ Z_{d_s}.
    """

    ring: str
    cyclic: list[int]
    label: str | None = None


class RegularModuleSpec(_Spec):
    ring: str
    regular: Literal[True]
    label: str | None = None


class IdealModuleSpec(_Spec):
    """
    Левый идеал, порожденный перечисленными элементами кольца, как модуль.
    """

    ring: str
    ideal: list[int]
    label: str | None = None


class DirectSumSpec(_Spec):
    direct_sum: list[str]
    label: str | None = None


class SubmoduleSpec(_Spec):
    """
    Подмодуль модуля ``submodule_of``: либо все ``elements``, либо span ``generators``.
    """

    submodule_of: str
    elements: list[int] | None = None
    generators: list[int] | None = None
    label: str | None = None


class QuotientSpec(_Spec):
    quotient_of: str
    by: str
    label: str | None = None


ModuleSpec = Union[
    TableModuleSpec,
    CyclicModuleSpec,
    RegularModuleSpec,
    IdealModuleSpec,
    DirectSumSpec,
    SubmoduleSpec,
    QuotientSpec,
]


class TaskSpec(_Spec):
    command: Literal["classify", "check"]
    module: str | None = None
    property: Literal["self-pure", "M-pure", "pure"] | None = None
    submodule: str | None = None
    test_module: str | None = None


class InputDocument(BaseSchema):
    """
    Входной документ: именованные кольца, модули и подмодули, список задач.
    """

    model_config = ConfigDict(extra="forbid")

    rings: dict[str, RingSpec] = Field(default_factory=dict)
    modules: dict[str, ModuleSpec] = Field(default_factory=dict)
    tasks: list[TaskSpec] = Field(default_factory=list)


def load_document(path: str | Path) -> InputDocument:
    """
    Читает документ в кодировке UTF-8.

    :raises InputDocumentError: Если файл не читается, не является JSON или не проходит схему.
    """

    try:
        raw = Path(path).read_text(encoding="utf-8")
        return InputDocument.model_validate(json.loads(raw))
    except OSError as e:
        raise InputDocumentError(f"Cannot read {path}: {e.strerror}")
    except json.JSONDecodeError as e:
        raise InputDocumentError(f"{path} is not valid JSON: {e.msg} at line {e.lineno}")
    except ValidationError as e:
        raise InputDocumentError(
            f"{path} does not match the document schema",
            debug_message=str(e),
        )


class ResolvedDocument:
    """
    Разрешенный документ: каждая структура построена и прошла ``validate``
    в момент разрешения, до выполнения любых задач.
    """

    def __init__(self, document: InputDocument, limits: CapacityLimits | None = None):
        self.document: InputDocument = document
        self.limits: CapacityLimits = limits or default_limits()
        self.rings: dict[str, BaseRing] = {}
        self.modules: dict[str, FinModule] = {}
        self.submodules: dict[str, Submodule] = {}
        self.reports: list[ValidationReport] = []
        self._resolving: set[str] = set()

    def _enter(self, name: str) -> None:
        if name in self._resolving:
            raise InputDocumentError(f"Circular reference through {name!r}")
        self._resolving.add(name)

    def _check(self, structure) -> None:
        self.reports.append(ensure_valid(structure))

    @staticmethod
    def _indices(name: str, values: list[int], order: int) -> list[int]:
        """
        :raises InputDocumentError: Если индекс элемента вне [0, order).
        """

        outside = [value for value in values if not 0 <= value < order]
        if outside:
            raise InputDocumentError(f"{name!r}: element indices {outside} are outside [0, {order})")
        return values

    def ring(self, name: str) -> BaseRing:
        if name in self.rings:
            return self.rings[name]
        if name not in self.document.rings:
            raise InputDocumentError(f"Unknown ring {name!r}")

        self._enter(name)
        spec = self.document.rings[name]
        if spec == "integers":
            ring: BaseRing = INTEGERS
        elif isinstance(spec, CyclicRingSpec):
            ring = make_cyclic_ring(spec.cyclic)
        elif isinstance(spec, ProductRingSpec):
            first = require_finite(self.ring(spec.product[0]), "product ring")
            second = require_finite(self.ring(spec.product[1]), "product ring")
            ring = make_product_ring(first, second)
        else:
            table = spec.table
            ring = RingTable(table.add, table.mul, table.zero, table.one, label=spec.label or name)
        if isinstance(ring, RingTable):
            self._check(ring)

        self._resolving.discard(name)
        self.rings[name] = ring
        return ring

    def module(self, name: str) -> FinModule:
        """
        Модуль по имени; имя подмодуля дает подмодуль как самостоятельный модуль.
        """

        if name in self.modules:
            return self.modules[name]
        spec = self.document.modules.get(name)
        if spec is None:
            raise InputDocumentError(f"Unknown module {name!r}")
        if isinstance(spec, SubmoduleSpec):
            return self.submodule(name).module

        self._enter(name)
        module = self._build_module(name, spec)
        if spec.label:
            module = FinModule(
                module.ring, module.add, module.zero, module.action, label=spec.label, names=module.names
            )
        self._check(module)

        self._resolving.discard(name)
        self.modules[name] = module
        return module

    def _build_module(self, name: str, spec: ModuleSpec) -> FinModule:
        if isinstance(spec, TableModuleSpec):
            table = spec.table
            return FinModule(
                self.ring(spec.ring),
                table.add,
                table.zero,
                action=table.action,
                label=name,
                names=tuple(table.names) if table.names else None,
            )
        if isinstance(spec, CyclicModuleSpec):
            ring = self.ring(spec.ring)
            parts = [cyclic_module(ring, d) for d in spec.cyclic]
            return direct_sum(parts, ring=ring, limits=self.limits).module
        if isinstance(spec, RegularModuleSpec):
            return regular_module(require_finite(self.ring(spec.ring), "regular module"))
        if isinstance(spec, IdealModuleSpec):
            ring = require_finite(self.ring(spec.ring), "ideal module")
            regular = regular_module(ring)
            ideal = LeftIdeal(ring, span(regular, self._indices(name, spec.ideal, ring.order)))
            self._check(ideal)
            module = ideal_module(ideal)
            module.label = name
            return module
        if isinstance(spec, DirectSumSpec):
            parts = [self.module(part) for part in spec.direct_sum]
            return direct_sum(parts, limits=self.limits).module

        parent = self.module(spec.quotient_of)
        by = self.submodule(spec.by)
        if by.parent is not parent:
            raise InputDocumentError(f"{spec.by!r} is not a submodule of {spec.quotient_of!r}")
        return quotient(parent, by).module

    def submodule(self, name: str) -> Submodule:
        if name in self.submodules:
            return self.submodules[name]
        spec = self.document.modules.get(name)
        if not isinstance(spec, SubmoduleSpec):
            raise InputDocumentError(f"{name!r} is not declared with submodule_of")
        if (spec.elements is None) == (spec.generators is None):
            raise InputDocumentError(f"{name!r} needs exactly one of elements or generators")

        self._enter(name)
        parent = self.module(spec.submodule_of)
        if spec.elements is not None:
            elements = self._indices(name, spec.elements, parent.order)
        else:
            elements = span(parent, self._indices(name, spec.generators, parent.order))
        sub = Submodule(parent, elements, label=spec.label or name)
        self._check(sub)

        self._resolving.discard(name)
        self.submodules[name] = sub
        return sub

    def resolve_all(self) -> "ResolvedDocument":
        for name in self.document.rings:
            self.ring(name)
        for name, spec in self.document.modules.items():
            if isinstance(spec, SubmoduleSpec):
                self.submodule(name)
            else:
                self.module(name)
        logger.info(
            "Input document resolved",
            rings=len(self.rings),
            modules=len(self.modules),
            submodules=len(self.submodules),
        )
        return self


def resolve_document(path: str | Path, limits: CapacityLimits | None = None) -> ResolvedDocument:
    """
    Загружает документ и разрешает все его структуры.

    :raises InputDocumentError: Ошибки чтения, схемы или ссылок.
    :raises StructureValidationError: Если структура нарушает аксиомы.
    """

    return ResolvedDocument(load_document(path), limits).resolve_all()
