import time
from functools import lru_cache
from typing import (
    Callable,
    Iterator,
    NamedTuple,
)

from app.core import (
    logger,
    settings,
)
from app.core.config import (
    CapacityLimits,
    default_limits,
)
from app.domain.algebra import (
    BaseRing,
    FinModule,
    IdealHom,
    LeftIdeal,
    RingTable,
    Submodule,
    abelian_group,
    direct_complement,
    direct_sum,
    greedy_generators,
    kernel,
    left_ideals,
    power,
    product_module,
    regular_module,
    submodules,
)
from app.domain.filters import (
    filter_closure,
    filter_contains,
)
from app.domain.harness.schemas import (
    HarnessRun,
    TheoremReport,
    Violation,
)
from app.domain.purity import (
    ExtensionFailure,
    PurityVerdict,
    bounded_equational_purity,
    bounded_fp_oracle,
    classify,
    extends_to_ring,
    hierarchy_violations,
    is_absolutely_pure,
    is_absolutely_self_pure,
    is_pure,
    is_quasi_injective,
    is_regular_ring,
    is_self_pure,
    is_semisimple_ring,
    revalidate_failure,
    revalidate_verdict,
)
from app.domain.zoo import (
    ZooScope,
    chains,
    parse_ring_spec,
    scope_modules,
)
from app.exceptions.base import (
    CapacityError,
    InvariantViolationError,
)
from app.utils.parallel import ordered_map


VIOLATION_NOTE = (
    "Every checked statement is a proven theorem: a violation is an implementation bug, "
    "not a counterexample."
)
INPUT_SPEC = "input"
ORACLE_RING_SPECS = ("integers", "Z4")


class HarnessContext(NamedTuple):
    scope: ZooScope
    limits: CapacityLimits
    rings: dict[str, BaseRing]
    zoo: dict[str, list[FinModule]]


class HarnessJob(NamedTuple):
    theorem: str
    scope: ZooScope
    limits: CapacityLimits
    extra_modules: tuple[FinModule, ...]


@lru_cache(maxsize=8)
def _cached_zoo(scope: str, limits: CapacityLimits) -> dict[str, list[FinModule]]:
    return scope_modules(ZooScope.model_validate_json(scope), limits)


def build_context(
    scope: ZooScope,
    limits: CapacityLimits | None = None,
    extra_modules: tuple[FinModule, ...] = (),
) -> HarnessContext:
    """
    Кольца и зоопарк области перебора. Модули из входного документа добавляются
    отдельной группой ``input``.
    """

    limits = limits or default_limits()
    zoo = dict(_cached_zoo(scope.model_dump_json(), limits))
    rings: dict[str, BaseRing] = {spec: parse_ring_spec(spec) for spec in scope.rings}
    if extra_modules:
        zoo[INPUT_SPEC] = list(extra_modules)
    return HarnessContext(scope=scope, limits=limits, rings=rings, zoo=zoo)


def _finite_rings(ctx: HarnessContext) -> Iterator[tuple[str, RingTable]]:
    for spec, ring in ctx.rings.items():
        if isinstance(ring, RingTable):
            yield spec, ring


def _all_modules(ctx: HarnessContext) -> Iterator[tuple[str, FinModule]]:
    for spec, modules in ctx.zoo.items():
        for module in modules:
            yield spec, module


def describe_failure(failure: ExtensionFailure | None) -> str:
    if failure is None:
        return "no witness"
    text = f"L = {failure.ideal.label}, f: {failure.hom.label}, ker f = {failure.kernel.label}"
    if failure.ambient_label is not None:
        text += f", extends inside the ambient via 1 ↦ {failure.ambient_label}"
    return text


def _skip(report: TheoremReport, instance: str, error: CapacityError) -> None:
    logger.warning("Instance skipped", theorem=report.theorem, instance=instance, error=str(error))
    report.skipped.append(f"{instance}: {error}")


class _SelfPurityTable:
    """
    Вердикты A ≤sp B для пар подмодулей одного модуля с запоминанием.
    """

    def __init__(self, module: FinModule, limits: CapacityLimits):
        self.module: FinModule = module
        self.limits: CapacityLimits = limits
        self._cache: dict[tuple[tuple[int, ...], tuple[int, ...]], PurityVerdict] = {}

    def __call__(self, inner: Submodule, outer: Submodule) -> PurityVerdict:
        key = (inner.elements, outer.elements)
        if key not in self._cache:
            self._cache[key] = is_self_pure(inner.within(outer), self.limits)
        return self._cache[key]


def _triples(module: FinModule, depth: int, limits: CapacityLimits) -> Iterator[tuple[Submodule, ...]]:
    """
    Нестрогие тройки A ≤ B ≤ C из строгих цепочек длины не больше 3.
    """

    for chain in chains(module, min(depth, 3), limits):
        if len(chain) == 1:
            yield chain[0], chain[0], chain[0]
        elif len(chain) == 2:
            yield chain[0], chain[0], chain[1]
            yield chain[0], chain[1], chain[1]
        else:
            yield chain


def _chain_label(spec: str, module: FinModule, triple: tuple[Submodule, ...]) -> str:
    return f"{spec}: " + " ≤ ".join(sub.label for sub in triple) + f" in {module.label}"


def check_transitivity(ctx: HarnessContext) -> TheoremReport:
    report = TheoremReport(
        theorem="transitivity",
        statement="A ≤sp B and B ≤sp C imply A ≤sp C",
    )
    for spec, module in _all_modules(ctx):
        table = _SelfPurityTable(module, ctx.limits)
        try:
            for a, b, c in _triples(module, ctx.scope.chain_depth, ctx.limits):
                report.instances += 1
                if not (table(a, b).verdict and table(b, c).verdict):
                    continue
                outer = table(a, c)
                if not outer.verdict:
                    report.violations.append(
                        Violation(
                            instance=_chain_label(spec, module, (a, b, c)),
                            witness=describe_failure(outer.failure),
                        )
                    )
        except CapacityError as error:
            _skip(report, f"{spec}: {module.label}", error)
    return report


def check_restriction(ctx: HarnessContext) -> TheoremReport:
    report = TheoremReport(
        theorem="restriction",
        statement="A ≤ B ≤ C and A ≤sp C imply A ≤sp B",
    )
    for spec, module in _all_modules(ctx):
        table = _SelfPurityTable(module, ctx.limits)
        try:
            for a, b, c in _triples(module, ctx.scope.chain_depth, ctx.limits):
                report.instances += 1
                if not table(a, c).verdict:
                    continue
                inner = table(a, b)
                if not inner.verdict:
                    report.violations.append(
                        Violation(
                            instance=_chain_label(spec, module, (a, b, c)),
                            witness=describe_failure(inner.failure),
                        )
                    )
        except CapacityError as error:
            _skip(report, f"{spec}: {module.label}", error)
    return report


def check_pure_implies_self_pure(ctx: HarnessContext) -> TheoremReport:
    """
    Для конечного модуля чистые подмодули - прямые слагаемые, поэтому проверяются
    только они.
    """

    report = TheoremReport(
        theorem="pure_implies_self_pure",
        statement="A ≤ B pure implies A ≤sp B",
    )
    for spec, module in _all_modules(ctx):
        try:
            for sub in submodules(module, ctx.limits):
                if direct_complement(sub, ctx.limits) is None:
                    continue
                report.instances += 1
                verdict = is_self_pure(sub, ctx.limits)
                if not verdict.verdict:
                    witness = describe_failure(verdict.failure)
                    if not revalidate_verdict(sub, verdict):
                        witness += " (witness does not revalidate)"
                    report.violations.append(
                        Violation(instance=f"{spec}: {sub.label} ≤ {module.label}", witness=witness)
                    )
        except CapacityError as error:
            _skip(report, f"{spec}: {module.label}", error)
    return report


def _closure_check(
    ctx: HarnessContext,
    report: TheoremReport,
    qualifies: Callable[[Submodule], bool],
) -> TheoremReport:
    for spec, module in _all_modules(ctx):
        try:
            if not is_absolutely_self_pure(module, ctx.limits).verdict:
                continue
            for sub in submodules(module, ctx.limits):
                if not qualifies(sub):
                    continue
                report.instances += 1
                verdict = is_absolutely_self_pure(sub.module, ctx.limits)
                if not verdict.verdict:
                    report.violations.append(
                        Violation(
                            instance=f"{spec}: {sub.label} ≤ {module.label}",
                            witness=describe_failure(verdict.failure),
                        )
                    )
        except CapacityError as error:
            _skip(report, f"{spec}: {module.label}", error)
    return report


def check_summand_closure(ctx: HarnessContext) -> TheoremReport:
    report = TheoremReport(
        theorem="summand_closure",
        statement="Direct summands of absolutely self pure modules are absolutely self pure",
    )
    return _closure_check(ctx, report, lambda sub: direct_complement(sub, ctx.limits) is not None)


def check_self_pure_submodule_closure(ctx: HarnessContext) -> TheoremReport:
    report = TheoremReport(
        theorem="self_pure_submodule_closure",
        statement="Self pure submodules of absolutely self pure modules are absolutely self pure",
    )
    return _closure_check(ctx, report, lambda sub: is_self_pure(sub, ctx.limits).verdict)


def check_direct_sum(ctx: HarnessContext) -> TheoremReport:
    report = TheoremReport(
        theorem="direct_sum",
        statement="A is absolutely self pure iff A^k is, for every finite k",
        skipped=["k = 1 is a tautology", "infinite index sets are out of scope"],
    )
    for spec, module in _all_modules(ctx):
        if module.is_zero:
            continue
        try:
            base = is_absolutely_self_pure(module, ctx.limits)
        except CapacityError as error:
            _skip(report, f"{spec}: {module.label}", error)
            continue
        for k in range(2, ctx.scope.copies + 1):
            if module.order**k > ctx.limits.direct_sum_order:
                break
            instance = f"{spec}: ({module.label})^{k}"
            try:
                summed = is_absolutely_self_pure(power(module, k, ctx.limits), ctx.limits)
            except CapacityError as error:
                _skip(report, instance, error)
                break
            report.instances += 1
            if summed.verdict != base.verdict:
                failure = summed.failure or base.failure
                report.violations.append(
                    Violation(
                        instance=instance,
                        witness=f"A: {base.verdict}, A^{k}: {summed.verdict}; {describe_failure(failure)}",
                    )
                )
    return report


def check_noetherian_equivalence(ctx: HarnessContext) -> TheoremReport:
    report = TheoremReport(
        theorem="noetherian_equivalence",
        statement="Over a left noetherian ring absolutely self pure modules are quasi injective",
        skipped=["the converse needs a non-noetherian ring and is not tested"],
    )
    for spec, module in _all_modules(ctx):
        try:
            asp = is_absolutely_self_pure(module, ctx.limits)
            qi = is_quasi_injective(module, ctx.limits)
        except CapacityError as error:
            _skip(report, f"{spec}: {module.label}", error)
            continue
        report.instances += 1
        if asp.verdict != qi.verdict:
            report.violations.append(
                Violation(
                    instance=f"{spec}: {module.label}",
                    witness=(
                        f"absolutely_self_pure={asp.verdict}, quasi_injective={qi.verdict}; "
                        f"{describe_failure(asp.failure or qi.failure)}"
                    ),
                )
            )
    return report


def _ideal_label(ideal: LeftIdeal) -> str:
    ring: RingTable = ideal.ring
    generators = greedy_generators(regular_module(ring), ideal.elements)
    if len(generators) == 1:
        return f"{generators[0]}{ring.label}"
    return "⟨" + ",".join(str(g) for g in generators) + f"⟩≤{ring.label}"


def regular_witness(ideal: LeftIdeal, limits: CapacityLimits | None = None) -> tuple[FinModule, IdealHom]:
    """
    Модуль L ⊕ R и отображение f: L → L ⊕ R, a ↦ (a, 0) для главного идеала L
    без дополнения. Ядро f нулевое и содержит ann((0, 1)) = 0.
    """

    ring: RingTable = ideal.ring
    as_module = Submodule(regular_module(ring), ideal.elements, label=_ideal_label(ideal)).module
    summed = direct_sum([as_module, regular_module(ring)], limits=limits)
    inject = summed.injections[0]
    f = IdealHom(ideal, summed.module, images=[inject(i) for i in range(ideal.order)])
    return summed.module, f


def check_regular_equivalence(ctx: HarnessContext) -> TheoremReport:
    report = TheoremReport(
        theorem="regular_equivalence",
        statement="R is regular iff every left R-module is absolutely self pure",
    )
    if any(not ring.is_finite for ring in ctx.rings.values()):
        report.skipped.append("integers: L ⊕ R is infinite, the witness construction needs a finite ring")

    for spec, ring in _finite_rings(ctx):
        try:
            regular = is_regular_ring(ring, ctx.limits)
            if regular.verdict:
                for module in ctx.zoo.get(spec, []):
                    report.instances += 1
                    verdict = is_absolutely_self_pure(module, ctx.limits)
                    if not verdict.verdict:
                        report.violations.append(
                            Violation(
                                instance=f"{spec} (regular): {module.label}",
                                witness=describe_failure(verdict.failure),
                            )
                        )
                continue

            report.instances += 1
            module, f = regular_witness(regular.witness, ctx.limits)
            instance = f"{spec} (not regular): {module.label}, f: {f.label}"
            flt = filter_closure(module)
            if not filter_contains(flt, kernel(f)) or extends_to_ring(f) is not None:
                report.violations.append(
                    Violation(instance=instance, witness="f qualifies but extends, or its kernel leaves Ω̄")
                )
                continue
            verdict = is_absolutely_self_pure(module, ctx.limits)
            if verdict.verdict or not revalidate_failure(verdict.failure, flt):
                report.violations.append(
                    Violation(instance=instance, witness=describe_failure(verdict.failure))
                )
            logger.debug("Regularity witness built", ring=spec, module=module.label)
        except CapacityError as error:
            _skip(report, spec, error)
    return report


def check_semisimple(ctx: HarnessContext) -> TheoremReport:
    report = TheoremReport(
        theorem="semisimple",
        statement="R is semisimple iff every R-module is quasi injective",
    )
    for spec, ring in ctx.rings.items():
        modules: list[FinModule] = list(ctx.zoo.get(spec, []))
        try:
            if isinstance(ring, RingTable):
                semisimple = is_semisimple_ring(ring, ctx.limits).verdict
                if not semisimple:
                    witness = is_regular_ring(ring, ctx.limits).witness
                    if witness is None:
                        witness = next(
                            ideal
                            for ideal in left_ideals(ring, ctx.limits)
                            if direct_complement(ideal.as_submodule(), ctx.limits) is None
                        )
                    modules.append(regular_witness(witness, ctx.limits)[0])
            else:
                semisimple = False
                modules.append(abelian_group([2, 4]))
        except InvariantViolationError as error:
            report.violations.append(Violation(instance=spec, witness=str(error)))
            continue
        except CapacityError as error:
            _skip(report, spec, error)
            continue

        failures: list[tuple[FinModule, ExtensionFailure]] = []
        for module in modules:
            try:
                verdict = is_quasi_injective(module, ctx.limits)
            except CapacityError as error:
                _skip(report, f"{spec}: {module.label}", error)
                continue
            report.instances += 1
            if not verdict.verdict:
                failures.append((module, verdict.failure))

        if semisimple and failures:
            module, failure = failures[0]
            report.violations.append(
                Violation(instance=f"{spec} (semisimple): {module.label}", witness=describe_failure(failure))
            )
        if not semisimple and not failures:
            report.violations.append(
                Violation(instance=f"{spec} (not semisimple)", witness="every module checked is quasi injective")
            )
    return report


def check_product_decomposition(ctx: HarnessContext) -> TheoremReport:
    report = TheoremReport(
        theorem="product_decomposition",
        statement="Over R1 × R2 the flags of A × B are the conjunctions of the flags of A and B",
    )
    finite = list(_finite_rings(ctx))
    flags: dict[int, tuple[bool, ...]] = {}

    def flags_of(module: FinModule) -> tuple[bool, ...]:
        if id(module) not in flags:
            flags[id(module)] = classify(module, ctx.limits).flags
        return flags[id(module)]

    for i, (first_spec, first) in enumerate(finite):
        for second_spec, second in finite[i:]:
            if first.order * second.order > ctx.limits.ring_order:
                continue
            for a in ctx.zoo.get(first_spec, []):
                for b in ctx.zoo.get(second_spec, []):
                    if a.order * b.order > ctx.scope.module_order_cap:
                        continue
                    instance = f"{first.label}×{second.label}: {a.label}×{b.label}"
                    try:
                        expected = tuple(x and y for x, y in zip(flags_of(a), flags_of(b)))
                        actual = classify(product_module(a, b), ctx.limits).flags
                    except CapacityError as error:
                        _skip(report, instance, error)
                        continue
                    report.instances += 1
                    if actual != expected:
                        report.violations.append(
                            Violation(instance=instance, witness=f"flags {actual}, expected {expected}")
                        )
    return report


def check_hierarchy(ctx: HarnessContext) -> TheoremReport:
    report = TheoremReport(
        theorem="hierarchy",
        statement=(
            "injective ⟹ quasi injective ⟹ absolutely self pure, "
            "absolutely pure ⟹ absolutely self pure"
        ),
    )
    for spec, module in _all_modules(ctx):
        try:
            record = classify(module, ctx.limits, enforce=False)
        except CapacityError as error:
            _skip(report, f"{spec}: {module.label}", error)
            continue
        report.instances += 1
        for broken in hierarchy_violations(record):
            report.violations.append(Violation(instance=f"{spec}: {module.label}", witness=broken))
    return report


def _purity_agreement(ctx: HarnessContext, report: TheoremReport, spec: str, module: FinModule) -> None:
    oracle = settings.oracle
    for sub in submodules(module, ctx.limits):
        instance = f"{spec}: {sub.label} ≤ {module.label}"
        report.instances += 1
        verdict = is_pure(sub, ctx.limits, max_vars=oracle.max_vars, max_eqs=oracle.max_eqs)
        if not verdict.verdict and verdict.equation is None:
            report.violations.append(Violation(instance=instance, witness="not a summand, no equation found"))
            continue
        if not revalidate_verdict(sub, verdict):
            report.violations.append(Violation(instance=instance, witness="witness does not revalidate"))
            continue
        if verdict.verdict:
            result = bounded_equational_purity(sub, oracle.max_vars, oracle.max_eqs, ctx.limits)
            if result.found:
                report.violations.append(
                    Violation(instance=instance, witness=f"summand, yet {result.equation.rendered}")
                )


def _injectivity_agreement(ctx: HarnessContext, report: TheoremReport, spec: str, module: FinModule) -> None:
    oracle = settings.oracle
    instance = f"{spec}: {module.label}"
    verdict = is_absolutely_pure(module, ctx.limits)
    result = bounded_fp_oracle(module, oracle.max_rank, oracle.max_gens, ctx.limits)
    if verdict.verdict and result.found:
        report.instances += 1
        report.violations.append(
            Violation(instance=instance, witness=f"absolutely pure, yet {result.fp_failure.rendered}")
        )
    elif not verdict.verdict and not result.found:
        if len(verdict.failure.hom.generator_images) > oracle.max_gens:
            report.skipped.append(f"{instance}: Baer witness needs more than {oracle.max_gens} generators")
            return
        report.instances += 1
        report.violations.append(
            Violation(instance=instance, witness="not absolutely pure, FP oracle found nothing")
        )
    else:
        report.instances += 1


def check_oracle_agreement(ctx: HarnessContext) -> TheoremReport:
    report = TheoremReport(
        theorem="oracle_agreement",
        statement=(
            "Direct-summand purity agrees with the bounded equational oracle; "
            "Baer injectivity agrees with the bounded FP oracle"
        ),
    )
    cap: int = settings.oracle.pair_order_cap
    oracle_rings = [parse_ring_spec(spec) for spec in ORACLE_RING_SPECS]

    for spec, ring in ctx.rings.items():
        for module in ctx.zoo.get(spec, []):
            if module.order > cap:
                continue
            try:
                if ring in oracle_rings:
                    _purity_agreement(ctx, report, spec, module)
                if isinstance(ring, RingTable):
                    _injectivity_agreement(ctx, report, spec, module)
            except CapacityError as error:
                _skip(report, f"{spec}: {module.label}", error)
    return report


def check_quasi_pure_remark(ctx: HarnessContext) -> TheoremReport:
    return TheoremReport(
        theorem="quasi_pure_remark",
        statement="Absolutely quasi pure modules and absolute self purity",
        skipped=[
            "needs the quasi injective envelope, which is not computed; the implication is not asserted",
        ],
    )


THEOREMS: dict[str, Callable[[HarnessContext], TheoremReport]] = {
    "transitivity": check_transitivity,
    "restriction": check_restriction,
    "pure_implies_self_pure": check_pure_implies_self_pure,
    "summand_closure": check_summand_closure,
    "self_pure_submodule_closure": check_self_pure_submodule_closure,
    "direct_sum": check_direct_sum,
    "noetherian_equivalence": check_noetherian_equivalence,
    "regular_equivalence": check_regular_equivalence,
    "semisimple": check_semisimple,
    "product_decomposition": check_product_decomposition,
    "hierarchy": check_hierarchy,
    "oracle_agreement": check_oracle_agreement,
    "quasi_pure_remark": check_quasi_pure_remark,
}


def run_check(job: HarnessJob) -> TheoremReport:
    """
    Выполняет одну проверку; функция уровня модуля, чтобы передаваться в пул процессов.
    """

    ctx = build_context(job.scope, job.limits, job.extra_modules)
    started: float = time.perf_counter()
    report = THEOREMS[job.theorem](ctx)
    report.elapsed = round(time.perf_counter() - started, 3)

    for violation in report.violations:
        logger.error(
            "Theorem violated",
            theorem=report.theorem,
            instance=violation.instance,
            witness=violation.witness,
        )
    logger.info(
        "Theorem checked",
        theorem=report.theorem,
        instances=report.instances,
        violations=len(report.violations),
        skipped=len(report.skipped),
    )
    return report


def run_all(
    scope: ZooScope,
    jobs: int | None = None,
    limits: CapacityLimits | None = None,
    extra_modules: tuple[FinModule, ...] = (),
    theorems: list[str] | None = None,
) -> HarnessRun:
    """
    Запускает проверки в фиксированном порядке ``THEOREMS``. Отчеты не зависят
    от числа рабочих процессов.

    :param scope: Область перебора.
    :param jobs: Число процессов; по умолчанию ``HARNESS_JOBS``.
    :param limits: Ограничения перебора.
    :param extra_modules: Модули входного документа.
    :param theorems: Подмножество проверок; по умолчанию все.

    :raises KeyError: Если проверка с таким именем не существует.
    """

    limits = limits or default_limits()
    jobs = jobs or settings.harness.jobs
    requested: list[str] = theorems or list(THEOREMS)
    for name in requested:
        if name not in THEOREMS:
            raise KeyError(name)
    names: list[str] = [name for name in THEOREMS if name in requested]

    logger.info("Harness started", theorems=len(names), jobs=jobs, rings=scope.rings)
    reports = ordered_map(
        run_check,
        [HarnessJob(name, scope, limits, tuple(extra_modules)) for name in names],
        jobs=jobs,
    )
    return HarnessRun(
        scope={**scope.model_dump(), "limits": limits.model_dump()},
        reports=reports,
    )
