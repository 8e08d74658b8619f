from typing import Any
import sys
import logging

from loguru import logger

from app.core.config import settings


__logger_kwargs: dict[str, Any] = {
    "level": settings.loguru.level,
    "format": settings.loguru.format,
    "serialize": settings.loguru.serialize,
}

logger.remove()
# stdout принадлежит отчетам
logger.add(sys.stderr, **__logger_kwargs)
if settings.loguru.file:
    logger.add(
        settings.loguru.file,
        rotation=settings.loguru.rotation,
        retention=settings.loguru.retention,
        compression=settings.loguru.compression,
        **__logger_kwargs,
    )


class StdlibBridge(logging.Handler):
    """
    Переправляет записи стандартного :mod:`logging` (пул процессов, numpy) в ``loguru``.
    """

    def emit(self, record: logging.LogRecord) -> None:
        try:
            level: str | int = logger.level(record.levelname).name
        except ValueError:
            level = record.levelno

        frame, depth = logging.currentframe(), 2
        while frame is not None and frame.f_code.co_filename == logging.__file__:
            frame = frame.f_back
            depth += 1

        logger.opt(depth=depth, exception=record.exc_info).log(level, record.getMessage())


logging.basicConfig(handlers=[StdlibBridge()], level=logging.NOTSET, force=True)
logging.getLogger().setLevel(logging.WARNING)
