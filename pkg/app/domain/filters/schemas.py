from pydantic import field_serializer

from app.domain.algebra import (
    BaseRing,
    LeftIdeal,
)
from app.schemas import DomainSchema


class AnnFilter(DomainSchema):
    """
    Фильтр, порожденный аннуляторами элементов модуля.

    Над конечным кольцом хранится база - замыкание аннуляторов относительно
    пересечений (отсортированная по порядку идеала); над Z - экспонента модуля.

    :ivar ring: Базовое кольцо.
    :ivar module: Метка модуля.
    :ivar base: Замкнутая относительно пересечений база (только для конечного кольца).
    :ivar exponent: Экспонента модуля (только для Z).
    """

    ring: BaseRing
    module: str
    base: tuple[LeftIdeal, ...] = ()
    exponent: int | None = None

    @property
    def minimum(self) -> LeftIdeal:
        """
        Наименьший элемент фильтра: пересечение всей базы (или exp·Z).
        """

        if self.exponent is not None:
            return LeftIdeal(self.ring, gen=self.exponent)
        return self.base[0]

    @field_serializer("ring")
    def serialize_ring(self, ring: BaseRing) -> str:
        return ring.label

    @field_serializer("base")
    def serialize_base(self, base: tuple[LeftIdeal, ...]) -> list[str]:
        return [ideal.label for ideal in base]
