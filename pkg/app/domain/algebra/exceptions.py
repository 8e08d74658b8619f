from typing import TYPE_CHECKING

from app.exceptions.base import ApplicationError
from app import status


if TYPE_CHECKING:
    from app.domain.algebra.schemas import (
        AxiomViolation,
        ValidationReport,
    )


class DimensionMismatchError(ApplicationError):
    message = "Tables have inconsistent dimensions"
    error_code = "dimension_mismatch"
    exit_code = status.EXIT_VALIDATION_ERROR


class InvalidConstructionError(ApplicationError):
    message = "Invalid constructor argument"
    error_code = "invalid_construction"
    exit_code = status.EXIT_VALIDATION_ERROR


class UnsupportedRingError(ApplicationError):
    message = "Operation is not supported for this base ring"
    error_code = "unsupported_ring"
    exit_code = status.EXIT_VALIDATION_ERROR


class StructureValidationError(ApplicationError):
    """
    Структура не удовлетворяет аксиомам. Содержит полный отчет проверки.
    """

    message = "Structure violates its axioms"
    error_code = "structure_invalid"
    exit_code = status.EXIT_VALIDATION_ERROR

    def __init__(
        self,
        message: str | None = None,
        *,
        report: "ValidationReport | None" = None,
        **kwargs,
    ):
        self.report = report
        if report is not None and message is None:
            axioms: str = ", ".join(v.axiom for v in report.violations)
            message = f"{report.structure} violates: {axioms}"
        super().__init__(message, **kwargs)


class AxiomError(ApplicationError):
    """
    Нарушение одной аксиомы. Собирается валидаторами в ``ValidationReport``.
    """

    message = "Axiom violated"
    error_code = "axiom_violated"
    exit_code = status.EXIT_VALIDATION_ERROR

    def __init__(self, violation: "AxiomViolation", **kwargs):
        self.violation = violation
        super().__init__(f"{violation.axiom}: {violation.detail}", **kwargs)
