import sys
from typing import TextIO

from app.core import (
    logger,
    settings,
)
from app.exceptions.base import (
    ApplicationError,
    UnexpectedError,
)


def application_exception_handler(ex: ApplicationError, stream: TextIO | None = None) -> int:
    """
    Обработчик ошибок бизнес-логики приложения.

    Печатает одну строку ``<code>: <message>`` (и подробности при
    ``ERROR_DETAIL_LEVEL=debug``) и возвращает код завершения исключения.

    :param ex: Экземпляр ``ApplicationError``.
    :param stream: Поток для сообщения.

    :return: Код завершения процесса.
    """

    stream = stream or sys.stderr
    print(f"{ex.error_code}: {ex.message}", file=stream)
    if settings.exception.error_detail_level == "debug" and ex.debug_message:
        print(ex.debug_message, file=stream)
    logger.error("Command failed", code=ex.error_code, exit_code=ex.exit_code)
    return ex.exit_code


def unhandled_exception_handler(ex: Exception, stream: TextIO | None = None) -> int:
    """
    Обработчик непредвиденных исключений: общий ответ ``UnexpectedError``.
    """

    stream = stream or sys.stderr
    logger.exception("Unexpected error")
    print(f"{UnexpectedError.error_code}: {UnexpectedError.message}", file=stream)
    return UnexpectedError.exit_code


def handle_exception(ex: Exception, stream: TextIO | None = None) -> int:
    if isinstance(ex, ApplicationError):
        return application_exception_handler(ex, stream)
    return unhandled_exception_handler(ex, stream)
