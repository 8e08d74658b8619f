from app import status


class ApplicationError(Exception):
    """
    Базовый класс исключений для всех ошибок бизнес-логики приложения.

    Содержит поля:
      - message: читаемое сообщение об ошибке.
      - debug_message: подробности для режима отладки.
      - error_code: машинно-ориентированный код ошибки.
      - exit_code: код завершения процесса для CLI.

    При инициализации можно переопределить любое поле.
    """

    message: str = "Internal error"
    debug_message: str | None = None
    error_code: str = "unknown_error"
    exit_code: int = status.EXIT_UNEXPECTED_ERROR

    def __init__(
        self,
        message: str | None = None,
        *,
        debug_message: str | None = None,
        error_code: str | None = None,
        exit_code: int | None = None,
    ):
        """
        Инициализирует исключение с возможностью перегрузки параметров.

        :param message: Текст сообщения ошибки.
        :param debug_message: Подробности ошибки.
        :param error_code: Машинно-ориентированный код ошибки.
        :param exit_code: Код завершения процесса.
        """

        self.message = message or self.message
        self.debug_message = debug_message or self.debug_message
        self.error_code = error_code or self.error_code
        self.exit_code = exit_code or self.exit_code
        super().__init__(
            self.message,
            self.debug_message,
            self.error_code,
            self.exit_code,
        )

    def __str__(self) -> str:
        return self.message

    def __repr__(self) -> str:
        return (
            f"{self.__class__.__name__}"
            f"(message='{self.message}', "
            f"debug_message='{self.debug_message}', "
            f"error_code='{self.error_code}', "
            f"exit_code='{self.exit_code}')"
        )


class UnexpectedError(ApplicationError):
    """
    Ошибка, не относящаяся к ошибкам, наследованным от ApplicationError.
    """

    message = "Unexpected internal error"
    error_code = "unexpected_error"
    exit_code = status.EXIT_UNEXPECTED_ERROR


class CapacityError(ApplicationError):
    """
    Превышено одно из ограничений перебора. Перебор никогда не усекается молча.
    """

    message = "Capacity limit exceeded"
    error_code = "capacity_exceeded"
    exit_code = status.EXIT_CAPACITY_ERROR

    def __init__(
        self,
        cap: str,
        limit: int,
        requested: int,
        **kwargs,
    ):
        """
        :param cap: Имя ограничения (например, ``module_order``).
        :param limit: Значение ограничения.
        :param requested: Запрошенный размер.
        """

        self.cap = cap
        self.limit = limit
        self.requested = requested
        super().__init__(
            kwargs.pop("message", None)
            or f"Capacity '{cap}' exceeded: requested {requested}, limit {limit}",
            **kwargs,
        )


class InvariantViolationError(ApplicationError):
    """
    Нарушено утверждение, которое гарантирует математика (импликация флагов,
    перекрестная проверка). Всегда означает ошибку реализации.
    """

    message = "Invariant violated: this is an implementation bug"
    error_code = "invariant_violation"
    exit_code = status.EXIT_VIOLATION


def check_capacity(cap: str, limit: int, requested: int) -> None:
    """
    Проверяет запрошенный размер перебора.

    :raises CapacityError: Если ``requested`` больше ``limit``.
    """

    if requested > limit:
        raise CapacityError(cap=cap, limit=limit, requested=requested)
