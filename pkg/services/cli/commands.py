from typing import (
    Any,
    NamedTuple,
)

from app import status
from app.core import (
    logger,
    settings,
)
from app.core.config import CapacityLimits
from app.domain.harness import run_all
from app.domain.purity import (
    ClassificationRecord,
    PurityVerdict,
    classify,
    is_M_pure,
    is_pure,
    is_self_pure,
)
from app.domain.zoo import (
    ZooScope,
    parse_ring_spec,
    ring_isomorphism_notes,
    scope_modules,
)
from services.cli.document import (
    InputDocumentError,
    ResolvedDocument,
    TaskSpec,
)
from services.cli.reports import (
    ReportFormat,
    ZooEntry,
    render_classification,
    render_harness,
    render_purity,
    render_validation,
    render_zoo,
    to_json,
)


class CommandResult(NamedTuple):
    output: str
    exit_code: int = status.EXIT_OK


def _provenance(command: str, limits: CapacityLimits, **extra: Any) -> dict[str, Any]:
    return {"command": command, "limits": limits.model_dump(), **extra}


def cmd_classify(
    doc: ResolvedDocument,
    names: list[str],
    limits: CapacityLimits,
    fmt: ReportFormat,
) -> CommandResult:
    """
    Классифицирует модули по именам; без имен - задачи ``classify`` документа,
    а если их нет, все модули документа.
    """

    if not names:
        names = [task.module for task in doc.document.tasks if task.command == "classify" and task.module]
    if not names:
        names = list(doc.modules)

    records: list[ClassificationRecord] = [classify(doc.module(name), limits) for name in names]
    provenance = _provenance("classify", limits)
    if fmt == "json":
        return CommandResult(to_json("classify", provenance, records))
    return CommandResult(render_classification(records, provenance))


def _check_one(
    doc: ResolvedDocument,
    prop: str,
    submodule: str,
    test_module: str | None,
    limits: CapacityLimits,
    max_vars: int | None,
    max_eqs: int | None,
) -> PurityVerdict:
    sub = doc.submodule(submodule)
    if prop == "self-pure":
        return is_self_pure(sub, limits)
    if prop == "pure":
        return is_pure(sub, limits, max_vars=max_vars, max_eqs=max_eqs)
    if test_module is None:
        raise InputDocumentError("M-pure needs a test module name")
    return is_M_pure(sub, doc.module(test_module), limits)


def cmd_check(
    doc: ResolvedDocument,
    prop: str | None,
    names: list[str],
    limits: CapacityLimits,
    fmt: ReportFormat,
    *,
    max_vars: int | None = None,
    max_eqs: int | None = None,
) -> CommandResult:
    """
    Проверяет самочистоту, M-чистоту или чистоту подмодуля. Без имен выполняются
    задачи ``check`` документа.
    """

    if names:
        tasks = [
            TaskSpec(
                command="check",
                property=prop,
                submodule=names[0],
                test_module=names[1] if len(names) > 1 else None,
            )
        ]
    else:
        tasks = [task for task in doc.document.tasks if task.command == "check"]

    verdicts: list[PurityVerdict] = []
    for task in tasks:
        if task.property is None or task.submodule is None:
            raise InputDocumentError("A check task needs a property and a submodule")
        verdicts.append(
            _check_one(doc, task.property, task.submodule, task.test_module, limits, max_vars, max_eqs)
        )

    provenance = _provenance(
        "check",
        limits,
        oracle={"max_vars": max_vars or settings.oracle.max_vars, "max_eqs": max_eqs or settings.oracle.max_eqs},
    )
    if fmt == "json":
        return CommandResult(to_json("check", provenance, verdicts))
    return CommandResult(render_purity(verdicts, provenance))


def cmd_verify_theorems(
    scope: ZooScope,
    limits: CapacityLimits,
    fmt: ReportFormat,
    *,
    jobs: int | None = None,
    doc: ResolvedDocument | None = None,
    theorems: list[str] | None = None,
) -> CommandResult:
    """
    Запускает все проверки; код завершения 1, если хотя бы одна нашла нарушение.
    """

    extra = tuple(doc.modules.values()) if doc is not None else ()
    try:
        run = run_all(scope, jobs, limits, extra, theorems)
    except KeyError as e:
        raise InputDocumentError(f"Unknown theorem {e.args[0]!r}")

    exit_code = status.EXIT_OK if run.ok else status.EXIT_VIOLATION
    if not run.ok:
        logger.error("Theorem violations found", theorems=[r.theorem for r in run.reports if not r.ok])

    provenance = _provenance("verify-theorems", limits, scope=scope.model_dump())
    if fmt == "json":
        return CommandResult(to_json("verify-theorems", provenance, run), exit_code)
    return CommandResult(render_harness(run, provenance), exit_code)


def cmd_zoo_list(
    scope: ZooScope,
    limits: CapacityLimits,
    fmt: ReportFormat,
) -> CommandResult:
    zoo = scope_modules(scope, limits)
    entries = [
        ZooEntry(ring=spec, module=module.label, order=module.order, exponent=module.exponent)
        for spec, modules in zoo.items()
        for module in modules
    ]
    notes = ring_isomorphism_notes([parse_ring_spec(spec) for spec in scope.rings])
    provenance = _provenance("zoo list", limits, scope=scope.model_dump(), ring_isomorphisms=notes)
    if fmt == "json":
        return CommandResult(to_json("zoo list", provenance, entries))
    return CommandResult(render_zoo(entries, notes, provenance))


def cmd_validate(
    doc: ResolvedDocument,
    limits: CapacityLimits,
    fmt: ReportFormat,
) -> CommandResult:
    """
    Отчеты проверки аксиом всех структур документа. Нарушение прерывает разрешение
    документа раньше, с кодом 2.
    """

    provenance = _provenance("validate", limits)
    if fmt == "json":
        return CommandResult(to_json("validate", provenance, doc.reports))
    return CommandResult(render_validation(doc.reports, provenance))
