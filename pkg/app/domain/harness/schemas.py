from pydantic import Field

from app.schemas import BaseSchema


class Violation(BaseSchema):
    """
    Нарушение проверяемого утверждения. Всегда означает ошибку реализации.

    :ivar instance: Описание экземпляра (кольцо, модули, цепочка).
    :ivar witness: Воспроизводимый свидетель.
    """

    instance: str
    witness: str


class TheoremReport(BaseSchema):
    """
    Итог проверки одного утверждения на всей области перебора.

    :ivar theorem: Идентификатор утверждения.
    :ivar statement: Формулировка.
    :ivar instances: Число проверенных экземпляров.
    :ivar violations: Нарушения (пусто для корректной реализации).
    :ivar skipped: Пропущенные направления и причины.
    :ivar elapsed: Время проверки в секундах.
    """

    theorem: str
    statement: str
    instances: int = 0
    violations: list[Violation] = Field(default_factory=list)
    skipped: list[str] = Field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations


class HarnessRun(BaseSchema):
    """
    Все отчеты одного прогона в детерминированном порядке.
    """

    scope: dict[str, object]
    reports: list[TheoremReport]

    @property
    def ok(self) -> bool:
        return all(report.ok for report in self.reports)
