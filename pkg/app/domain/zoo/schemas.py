from pydantic import (
    ConfigDict,
    Field,
)

from app.core import settings
from app.schemas import BaseSchema


class ZooScope(BaseSchema):
    """
    Описание области перебора для генерации колец и модулей.

    :ivar rings: Спецификации колец (``integers``, ``Z4``, ``Z2xZ3``).
    :ivar module_order_cap: Максимальный порядок модуля в зоопарке.
    :ivar free_rank_cap: Максимальный ранг k свободного модуля R^k.
    :ivar chain_depth: Максимальная длина цепочек подмодулей.
    :ivar copies: Максимальное число копий в проверке прямых сумм.
    :ivar seed: Зерно для необязательных случайных дополнений.
    :ivar random_supplements: Число случайных прямых сумм сверх канонического зоопарка.
    """

    model_config = ConfigDict(frozen=True)

    rings: list[str]
    module_order_cap: int = Field(gt=0)
    free_rank_cap: int = Field(gt=0)
    chain_depth: int = Field(gt=0)
    copies: int = Field(gt=0)
    seed: int = 0
    random_supplements: int = Field(default=0, ge=0)

    @classmethod
    def from_settings(cls, **overrides) -> "ZooScope":
        """
        Область перебора из переменных окружения; ``None`` в ``overrides`` игнорируется.
        """

        values = {
            "rings": settings.zoo.ring_specs,
            "module_order_cap": settings.zoo.module_order_cap,
            "free_rank_cap": settings.zoo.free_rank_cap,
            "chain_depth": settings.zoo.chain_depth,
            "copies": settings.zoo.copies,
            "seed": settings.zoo.seed,
            "random_supplements": settings.zoo.random_supplements,
        }
        values.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**values)
