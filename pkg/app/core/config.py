from typing import Literal
from functools import cached_property

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
)
from pydantic_settings import (
    BaseSettings as _BaseSettings,
    SettingsConfigDict,
)


class BaseSettings(_BaseSettings):
    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_parse_none_str="None",
        extra="ignore",
    )


class CapacityLimits(BaseModel):
    """
    Неизменяемый набор ограничений на размер перебора.

    Передается явно во все операции, перебор которых ограничен, чтобы флаги CLI и
    рабочие процессы не изменяли глобальное состояние.

    :ivar ring_order: Максимальный порядок конечного кольца.
    :ivar module_order: Максимальный порядок модуля, для которого строится решетка подмодулей.
    :ivar generators: Максимальное число образующих идеала при переборе гомоморфизмов.
    :ivar direct_sum_order: Максимальный порядок прямой суммы.
    :ivar oracle_space: Максимальный размер пространств R^k и B^k, которые перебирают оракулы.
    """

    model_config = ConfigDict(frozen=True)

    ring_order: int = Field(default=64, gt=0)
    module_order: int = Field(default=64, gt=0)
    generators: int = Field(default=4, gt=0)
    direct_sum_order: int = Field(default=256, gt=0)
    oracle_space: int = Field(default=4096, gt=0)


class CapacitySettings(BaseSettings):
    """
    Настройки ограничений алгебраического ядра.
    """

    ring_order_cap: int = Field(default=64, alias="RING_ORDER_CAP")
    module_order_cap: int = Field(default=64, alias="MODULE_ORDER_CAP")
    generator_cap: int = Field(default=4, alias="GENERATOR_CAP")
    direct_sum_order_cap: int = Field(default=256, alias="DIRECT_SUM_ORDER_CAP")
    oracle_space_cap: int = Field(default=4096, alias="ORACLE_SPACE_CAP")

    @property
    def limits(self) -> CapacityLimits:
        return CapacityLimits(
            ring_order=self.ring_order_cap,
            module_order=self.module_order_cap,
            generators=self.generator_cap,
            direct_sum_order=self.direct_sum_order_cap,
            oracle_space=self.oracle_space_cap,
        )


class ZooSettings(BaseSettings):
    """
    Настройки генерации колец и модулей для проверки теорем.
    """

    rings: str = Field(default="integers,Z2,Z4,Z6,Z8,Z2xZ2", alias="ZOO_RINGS")
    module_order_cap: int = Field(default=16, alias="ZOO_MODULE_ORDER_CAP")
    free_rank_cap: int = Field(default=2, alias="ZOO_FREE_RANK_CAP")
    chain_depth: int = Field(default=3, alias="ZOO_CHAIN_DEPTH")
    copies: int = Field(default=3, alias="ZOO_COPIES")
    seed: int = Field(default=0, alias="ZOO_SEED")
    random_supplements: int = Field(default=0, alias="ZOO_RANDOM_SUPPLEMENTS")

    @property
    def ring_specs(self) -> list[str]:
        return [spec.strip() for spec in self.rings.split(",") if spec.strip()]


class OracleSettings(BaseSettings):
    """
    Настройки ограниченных оракулов чистоты.
    """

    max_vars: int = Field(default=3, alias="ORACLE_MAX_VARS")
    max_eqs: int = Field(default=3, alias="ORACLE_MAX_EQS")
    max_rank: int = Field(default=2, alias="ORACLE_MAX_RANK")
    max_gens: int = Field(default=2, alias="ORACLE_MAX_GENS")
    pair_order_cap: int = Field(default=12, alias="ORACLE_PAIR_ORDER_CAP")


class HarnessSettings(BaseSettings):
    """
    Настройки прогона проверок теорем.
    """

    jobs: int = Field(default=1, alias="HARNESS_JOBS")


class LoguruSettings(BaseSettings):
    """
    Настройки логирования.
    """

    level: str = Field(default="INFO", alias="LOG_LEVEL")
    format: str = Field(
        default="<green>{time:HH:mm:ss}</green> | <level>{level: <8}</level> | {message}",
        alias="LOG_FORMAT",
    )
    serialize: bool = Field(default=False, alias="LOG_SERIALIZE")
    file: str | None = Field(default=None, alias="LOG_FILE")
    rotation: str | int = Field(default="1 day", alias="LOG_ROTATION")
    retention: str | int = Field(default="14 days", alias="LOG_RETENTION")
    compression: str = Field(default="zip", alias="LOG_COMPRESSION")


class ReportSettings(BaseSettings):
    """
    Настройки вывода отчетов.
    """

    format: Literal["text", "json"] = Field(default="text", alias="REPORT_FORMAT")
    json_indent: int = Field(default=2, alias="REPORT_JSON_INDENT")


class ExceptionSettings(BaseSettings):
    """
    Настройки исключений.
    """

    error_detail_level: Literal["safe", "debug"] = Field(
        default="safe",
        alias="ERROR_DETAIL_LEVEL",
    )


class Settings:
    """
    Настройки приложения.
    """

    @cached_property
    def capacity(self) -> CapacitySettings:
        return CapacitySettings()

    @cached_property
    def zoo(self) -> ZooSettings:
        return ZooSettings()

    @cached_property
    def oracle(self) -> OracleSettings:
        return OracleSettings()

    @cached_property
    def harness(self) -> HarnessSettings:
        return HarnessSettings()

    @cached_property
    def loguru(self) -> LoguruSettings:
        return LoguruSettings()

    @cached_property
    def report(self) -> ReportSettings:
        return ReportSettings()

    @cached_property
    def exception(self) -> ExceptionSettings:
        return ExceptionSettings()


settings = Settings()


def default_limits() -> CapacityLimits:
    """
    Возвращает ограничения, заданные окружением.
    """

    return settings.capacity.limits
