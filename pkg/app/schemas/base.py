from pydantic import (
    BaseModel,
    ConfigDict,
)


class BaseSchema(BaseModel):
    """
    Базовая схема Pydantic.

    Используется как точка расширения для создания общих схем проекта.
    """

    ...


class DomainSchema(BaseModel):
    """
    Базовая схема для результатов, которые ссылаются на алгебраические объекты
    (кольца, идеалы, модули, гомоморфизмы).

    Конфигурация (``model_config``):
        - ``arbitrary_types_allowed=True`` - поля могут хранить объекты алгебраического ядра.
        - ``frozen=True`` - результаты неизменяемы и безопасны для передачи между процессами.

    Сериализация алгебраических объектов выполняется через ``field_serializer`` в наследниках.
    """

    model_config = ConfigDict(
        arbitrary_types_allowed=True,
        frozen=True,
    )
