import json
from typing import (
    Any,
    Literal,
    Sequence,
)

from pydantic import BaseModel

from app.core import settings
from app.domain.algebra import ValidationReport
from app.domain.harness import (
    VIOLATION_NOTE,
    HarnessRun,
    describe_failure,
)
from app.domain.purity import (
    ClassificationRecord,
    PurityVerdict,
)
from app.schemas import BaseSchema


TOOL = "purity-workbench"
ReportFormat = Literal["text", "json"]


class ZooEntry(BaseSchema):
    ring: str
    module: str
    order: int
    exponent: int


class Report(BaseSchema):
    """
    Результат команды: заголовок происхождения и полезная нагрузка.

    :ivar command: Имя команды.
    :ivar provenance: Ограничения и параметры, с которыми выполнена команда.
    :ivar result: Сериализованные записи.
    """

    command: str
    provenance: dict[str, Any]
    result: Any


def to_json(command: str, provenance: dict[str, Any], payload: BaseModel | Sequence[BaseModel]) -> str:
    """
    Детерминированный JSON в UTF-8: повторный разбор и сериализация дают тот же текст.
    """

    if isinstance(payload, BaseModel):
        result: Any = payload.model_dump(mode="json")
    else:
        result = [item.model_dump(mode="json") for item in payload]
    report = Report(command=command, provenance={"tool": TOOL, **provenance}, result=result)
    return json.dumps(
        report.model_dump(mode="json"),
        indent=settings.report.json_indent,
        ensure_ascii=False,
    )


def table(headers: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    """
    Таблица с выравниванием колонок по ширине.
    """

    cells = [[str(h) for h in headers]] + [[_cell(v) for v in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(headers))]
    lines = ["  ".join(value.ljust(width) for value, width in zip(row, widths)).rstrip() for row in cells]
    lines.insert(1, "  ".join("-" * width for width in widths))
    return "\n".join(lines)


def _cell(value: Any) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)


def _provenance_lines(provenance: dict[str, Any]) -> list[str]:
    return [f"# {key}: {value}" for key, value in provenance.items()]


def render_classification(records: Sequence[ClassificationRecord], provenance: dict[str, Any]) -> str:
    lines = _provenance_lines(provenance)
    lines.append(
        table(
            ["module", "ring", "order", "injective", "absolutely_pure", "quasi_injective", "absolutely_self_pure"],
            [
                [r.module, r.ring, r.order, r.injective, r.absolutely_pure, r.quasi_injective, r.absolutely_self_pure]
                for r in records
            ],
        )
    )
    for record in records:
        for name, failure in record.witnesses.items():
            lines.append(f"{record.module} not {name}: {describe_failure(failure)}")
    notes = dict.fromkeys(note for record in records for note in record.notes)
    lines.extend(f"note: {note}" for note in notes)
    return "\n".join(lines)


def _purity_witness(verdict: PurityVerdict) -> str:
    if verdict.complement is not None:
        return f"complement {verdict.complement.label}"
    if verdict.equation is not None:
        return f"system {verdict.equation.rendered}"
    if verdict.failure is not None:
        return describe_failure(verdict.failure)
    return "-"


def render_purity(verdicts: Sequence[PurityVerdict], provenance: dict[str, Any]) -> str:
    lines = _provenance_lines(provenance)
    lines.append(
        table(
            ["property", "submodule", "ambient", "verdict", "witness"],
            [[v.property, v.submodule, v.ambient, v.verdict, _purity_witness(v)] for v in verdicts],
        )
    )
    notes = dict.fromkeys(note for verdict in verdicts for note in verdict.notes)
    lines.extend(f"note: {note}" for note in notes)
    return "\n".join(lines)


def render_harness(run: HarnessRun, provenance: dict[str, Any]) -> str:
    lines = _provenance_lines(provenance)
    lines.append(
        table(
            ["theorem", "instances", "violations", "skipped", "elapsed"],
            [[r.theorem, r.instances, len(r.violations), len(r.skipped), f"{r.elapsed:.3f}s"] for r in run.reports],
        )
    )
    for report in run.reports:
        for violation in report.violations:
            lines.append(f"VIOLATION {report.theorem}: {violation.instance} | {violation.witness}")
        for skipped in report.skipped:
            lines.append(f"skipped {report.theorem}: {skipped}")
    if not run.ok:
        lines.append(VIOLATION_NOTE)
    return "\n".join(lines)


def render_zoo(entries: Sequence[ZooEntry], notes: Sequence[str], provenance: dict[str, Any]) -> str:
    lines = _provenance_lines(provenance)
    lines.append(
        table(["ring", "module", "order", "exponent"], [[e.ring, e.module, e.order, e.exponent] for e in entries])
    )
    lines.extend(f"isomorphic rings: {note}" for note in notes)
    return "\n".join(lines)


def render_validation(reports: Sequence[ValidationReport], provenance: dict[str, Any]) -> str:
    lines = _provenance_lines(provenance)
    lines.append(
        table(
            ["kind", "structure", "valid"],
            [[r.kind, r.structure, r.ok] for r in reports],
        )
    )
    for report in reports:
        for violation in report.violations:
            lines.append(f"{report.structure}: {violation.axiom} at {violation.witness} ({violation.detail})")
    return "\n".join(lines)
