from typing import Literal

from pydantic import (
    Field,
    field_serializer,
)

from app.domain.algebra import (
    IdealHom,
    LeftIdeal,
    Submodule,
)
from app.schemas import (
    BaseSchema,
    DomainSchema,
)


class ExtensionWitness(DomainSchema):
    """
    Элемент m модуля, для которого l·m = f(l) при всех l из идеала, то есть
    продолжение f до гомоморфизма R → M (r ↦ r·m).
    """

    hom: IdealHom
    element: int

    @property
    def element_label(self) -> str:
        return self.hom.codomain.element_label(self.element)

    @field_serializer("hom")
    def serialize_hom(self, hom: IdealHom) -> str:
        return hom.label


class ExtensionFailure(DomainSchema):
    """
    Пара (L, f), для которой требуемое продолжение не существует.

    :ivar ideal: Левый идеал L.
    :ivar hom: Отображение f: L → A.
    :ivar kernel: Ядро f.
    :ivar ambient_element: Для проверок чистоты - элемент объемлющего модуля B,
        продолжающий f внутри B.
    """

    ideal: LeftIdeal
    hom: IdealHom
    kernel: LeftIdeal
    ambient_element: int | None = None
    ambient_label: str | None = None

    @field_serializer("ideal", "kernel")
    def serialize_ideal(self, ideal: LeftIdeal) -> str:
        return ideal.label

    @field_serializer("hom")
    def serialize_hom(self, hom: IdealHom) -> str:
        return hom.label


class EquationSystem(BaseSchema):
    """
    Система уравнений Σ_j r_ij x_j = a_i с правыми частями в подмодуле A,
    разрешимая в B и неразрешимая в A.

    :ivar coefficients: Матрица коэффициентов (индексы элементов кольца; над Z - целые числа).
    :ivar constants: Правые части (индексы элементов B).
    :ivar solution: Решение в B (индексы элементов B).
    :ivar rendered: Запись системы, например ``2x = 2``.
    """

    coefficients: list[list[int]]
    constants: list[int]
    solution: list[int]
    rendered: str


class FpFailure(BaseSchema):
    """
    Гомоморфизм из конечно порожденного подмодуля K ≤ R^k в A, не продолжающийся на R^k.

    :ivar rank: Ранг k свободного модуля.
    :ivar generators: Образующие K (координаты в R^k).
    :ivar images: Образы образующих (индексы элементов A).
    :ivar rendered: Читаемая запись.
    """

    rank: int
    generators: list[list[int]]
    images: list[int]
    rendered: str


class OracleResult(BaseSchema):
    """
    Результат ограниченного оракула. Отсутствие свидетеля в пределах границ
    не доказывает свойство (``conclusive`` = False).
    """

    oracle: Literal["equational_purity", "fp_injectivity"]
    subject: str
    bounds: dict[str, int]
    searched: int = 0
    equation: EquationSystem | None = None
    fp_failure: FpFailure | None = None

    @property
    def found(self) -> bool:
        return self.equation is not None or self.fp_failure is not None

    @property
    def conclusive(self) -> bool:
        return self.found


class PropertyVerdict(DomainSchema):
    """
    Вердикт для одного свойства модуля со свидетелем нарушения.
    """

    property: str
    module: str
    verdict: bool
    failure: ExtensionFailure | None = None
    notes: list[str] = Field(default_factory=list)


class PurityVerdict(DomainSchema):
    """
    Вердикт для пары A ≤ B.

    Свидетель: дополнение (для прямого слагаемого), система уравнений или пара (L, f).
    """

    property: str
    submodule: str
    ambient: str
    verdict: bool
    complement: Submodule | None = None
    failure: ExtensionFailure | None = None
    equation: EquationSystem | None = None
    notes: list[str] = Field(default_factory=list)

    @field_serializer("complement")
    def serialize_complement(self, complement: Submodule | None) -> str | None:
        return complement.label if complement is not None else None


class RingVerdict(DomainSchema):
    """
    Вердикт для свойства кольца (регулярность, полупростота).
    """

    property: str
    ring: str
    verdict: bool
    witness: LeftIdeal | None = None

    @field_serializer("witness")
    def serialize_witness(self, witness: LeftIdeal | None) -> str | None:
        return witness.label if witness is not None else None


class ClassificationRecord(DomainSchema):
    """
    Четыре флага иерархии свойств модуля со свидетелями для ложных флагов.

    Инварианты: injective ⟹ остальные; quasi_injective ⟹ absolutely_self_pure;
    absolutely_pure ⟹ absolutely_self_pure.
    """

    module: str
    ring: str
    order: int
    injective: bool
    absolutely_pure: bool
    quasi_injective: bool
    absolutely_self_pure: bool
    witnesses: dict[str, ExtensionFailure] = Field(default_factory=dict)
    notes: list[str] = Field(default_factory=list)

    @property
    def flags(self) -> tuple[bool, bool, bool, bool]:
        return (
            self.injective,
            self.absolutely_pure,
            self.quasi_injective,
            self.absolutely_self_pure,
        )
