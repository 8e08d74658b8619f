from pydantic import Field

from app.schemas import BaseSchema


class AxiomViolation(BaseSchema):
    """
    Нарушенная аксиома с конкретным свидетелем.

    :ivar axiom: Имя аксиомы, например ``mul_identity``.
    :ivar witness: Индексы элементов, на которых аксиома нарушена.
    :ivar detail: Читаемое описание нарушения.
    """

    axiom: str
    witness: list[int] = Field(default_factory=list)
    detail: str = ""


class ValidationReport(BaseSchema):
    """
    Результат полной проверки аксиом структуры. Пустой список нарушений означает,
    что все аксиомы выполнены.
    """

    structure: str
    kind: str
    violations: list[AxiomViolation] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations
