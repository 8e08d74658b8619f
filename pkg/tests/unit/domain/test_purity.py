import pytest

from app.domain.algebra import (
    INTEGERS,
    IdealHom,
    InvalidConstructionError,
    LeftIdeal,
    Submodule,
    UnsupportedRingError,
    abelian_group,
    cyclic_group,
    cyclic_module,
    left_ideals,
    make_cyclic_ring,
    make_product_ring,
    regular_module,
    zero_module,
)
from app.domain.filters import filter_closure
from app.domain.purity import (
    ClassificationRecord,
    ExtensionFailure,
    PropertyVerdict,
    PurityVerdict,
    RingVerdict,
    classify,
    extends_to_ring,
    hierarchy_violations,
    ideal_scope,
    is_absolutely_pure,
    is_absolutely_self_pure,
    is_injective_baer,
    is_M_pure,
    is_pure,
    is_quasi_injective,
    is_regular_ring,
    is_self_pure,
    is_semisimple_ring,
    revalidate_extension,
    revalidate_failure,
    revalidate_verdict,
)
from app.exceptions.base import InvariantViolationError
from tests.generators import ModuleGenerator


class TestExtension:
    def test_extends_over_integers(self):
        f = IdealHom(LeftIdeal(INTEGERS, gen=2), cyclic_group(4), value=2)
        witness = extends_to_ring(f)
        assert witness.element == 1
        assert revalidate_extension(witness)

    def test_does_not_extend(self):
        f = IdealHom(LeftIdeal(INTEGERS, gen=2), cyclic_group(4), value=1)
        assert extends_to_ring(f) is None

    def test_zero_ideal(self):
        f = IdealHom(LeftIdeal(INTEGERS, gen=0), cyclic_group(4), value=0)
        assert extends_to_ring(f).element == 0

    def test_finite_ring(self):
        ring = make_cyclic_ring(4)
        f = IdealHom(ModuleGenerator.ideal(4, [0, 2]), regular_module(ring), images=[0, 2])
        witness = extends_to_ring(f)
        assert witness.element == 1
        assert revalidate_extension(witness)

    def test_ideal_scope(self):
        assert [i.gen for i in ideal_scope(INTEGERS, 12)] == [0, 1, 2, 3, 4, 6, 12]
        assert [i.gen for i in ideal_scope(INTEGERS, 12, integer_sweep=3)] == [0, 1, 2, 3]
        ring = make_cyclic_ring(6)
        assert list(ideal_scope(ring, 6)) == left_ideals(ring)


class TestRelativePurity:
    def test_self_pure(self):
        sub = ModuleGenerator.two_z4()
        verdict = is_self_pure(sub)
        assert verdict.property == "self-pure"
        assert verdict.verdict
        assert verdict.failure is None
        assert revalidate_verdict(sub, verdict)

    def test_self_pure_with_full_sweep(self):
        assert is_self_pure(ModuleGenerator.two_z4(), integer_sweep=12).verdict

    def test_M_pure_failure(self):
        sub = ModuleGenerator.two_z4()
        verdict = is_M_pure(sub, cyclic_group(4))
        assert not verdict.verdict
        failure = verdict.failure
        assert failure.ideal.label == "2Z"
        assert failure.hom.label == "2 ↦ 2"
        assert failure.kernel.label == "4Z"
        assert failure.ambient_label == "1"
        assert revalidate_failure(failure, filter_closure(cyclic_group(4)), sub)
        assert revalidate_verdict(sub, verdict, cyclic_group(4))

    def test_M_pure_revalidation_needs_test_module(self):
        sub = ModuleGenerator.two_z4()
        with pytest.raises(InvalidConstructionError):
            revalidate_verdict(sub, is_M_pure(sub, cyclic_group(4)))

    def test_forged_relative_failure_rejected(self):
        sub = Submodule(cyclic_group(2), [0, 1])
        f = IdealHom(LeftIdeal(INTEGERS, gen=2), sub.module, value=1)
        failure = ExtensionFailure(ideal=f.domain, hom=f, kernel=LeftIdeal(INTEGERS, gen=4), ambient_element=1)
        verdict = PurityVerdict(
            property="self-pure",
            submodule=sub.label,
            ambient=sub.parent.label,
            verdict=False,
            failure=failure,
        )
        assert revalidate_failure(failure)
        assert not revalidate_failure(failure, sub=sub)
        assert not revalidate_failure(failure, filter_closure(sub.module))
        assert not revalidate_verdict(sub, verdict)

    @pytest.mark.parametrize("claimed", [0, 2, 8])
    def test_wrong_kernel_rejected(self, claimed):
        f = IdealHom(LeftIdeal(INTEGERS, gen=2), cyclic_group(2), value=1)
        failure = ExtensionFailure(ideal=f.domain, hom=f, kernel=LeftIdeal(INTEGERS, gen=claimed))
        assert not revalidate_failure(failure)

    def test_M_pure_with_smaller_filter(self):
        assert is_M_pure(ModuleGenerator.two_z4(), cyclic_group(2)).verdict

    def test_M_pure_other_ring(self):
        with pytest.raises(UnsupportedRingError):
            is_M_pure(ModuleGenerator.two_z4(), regular_module(make_cyclic_ring(4)))

    def test_pure_failure_has_equation(self):
        sub = ModuleGenerator.two_z4()
        verdict = is_pure(sub)
        assert not verdict.verdict
        assert verdict.equation.rendered == "2x = 2"
        assert verdict.equation.solution == [1]
        assert revalidate_verdict(sub, verdict)

    def test_pure_summand(self):
        sub = Submodule(abelian_group([2, 2]), [0, 2])
        verdict = is_pure(sub)
        assert verdict.verdict
        assert verdict.complement.elements == (0, 1)
        assert revalidate_verdict(sub, verdict)
        assert verdict.model_dump(mode="json")["complement"] == "{(0,0),(0,1)}"


class TestClassify:
    def test_cyclic_group(self):
        record = classify(cyclic_group(2))
        assert record.flags == (False, False, True, True)
        assert set(record.witnesses) == {"injective", "absolutely_pure"}
        assert record.witnesses["injective"].hom.label == "2 ↦ 1"
        assert len(record.notes) == 3

    def test_zero_module(self):
        assert all(classify(zero_module(INTEGERS)).flags)

    def test_self_injective_ring(self):
        record = classify(regular_module(make_cyclic_ring(4)))
        assert all(record.flags)
        assert record.witnesses == {}

    def test_quotient_of_cyclic_ring(self):
        record = classify(cyclic_module(make_cyclic_ring(4), 2))
        assert record.flags == (False, False, True, True)
        assert record.witnesses["injective"].kernel.label == "0"

    def test_all_flags_fail(self):
        module = ModuleGenerator.regular_witness_module()
        record = classify(module)
        assert record.flags == (False, False, False, False)
        failure = record.witnesses["absolutely_self_pure"]
        assert failure.hom.label == "2 ↦ (2,0)"
        assert revalidate_failure(failure, filter_closure(module))

    def test_quasi_injective_equals_absolutely_self_pure(self):
        module = ModuleGenerator.regular_witness_module()
        assert is_quasi_injective(module).verdict == is_absolutely_self_pure(module).verdict

    def test_enforces_hierarchy(self, mocker):
        mocker.patch(
            "app.domain.purity.service.is_absolutely_self_pure",
            return_value=PropertyVerdict(property="absolutely_self_pure", module="Z_2", verdict=False),
        )
        with pytest.raises(InvariantViolationError):
            classify(cyclic_group(2))
        record = classify(cyclic_group(2), enforce=False)
        assert hierarchy_violations(record) == ["quasi_injective without absolutely_self_pure"]

    def test_hierarchy_violations(self):
        record = ClassificationRecord(
            module="M",
            ring="Z",
            order=2,
            injective=True,
            absolutely_pure=False,
            quasi_injective=True,
            absolutely_self_pure=False,
        )
        assert hierarchy_violations(record) == [
            "injective does not imply the other flags",
            "quasi_injective without absolutely_self_pure",
        ]

    def test_integer_baer_witness(self):
        verdict = is_injective_baer(cyclic_group(6))
        assert not verdict.verdict
        assert verdict.failure.ideal.label == "2Z"
        assert revalidate_failure(verdict.failure)

    @pytest.mark.parametrize(
        "module, expected",
        [
            (cyclic_group(2), False),
            (regular_module(make_cyclic_ring(4)), True),
            (zero_module(INTEGERS), True),
        ],
    )
    def test_absolutely_pure_is_baer(self, module, expected):
        verdict = is_absolutely_pure(module)
        assert verdict.property == "absolutely_pure"
        assert verdict.verdict is expected
        assert verdict.model_dump()["failure"] == is_injective_baer(module).model_dump()["failure"]
        assert "Baer" in verdict.notes[0]


INTEGER_ZOO_FACTORS: list[list[int]] = [
    [],
    [2],
    [3],
    [4],
    [2, 2],
    [6],
    [8],
    [2, 4],
    [2, 2, 2],
    [9],
    [3, 3],
    [12],
    [2, 6],
    [16],
    [2, 8],
    [4, 4],
    [2, 2, 4],
]


class TestIntegerSweep:
    @pytest.mark.parametrize("check", [is_absolutely_self_pure, is_quasi_injective])
    @pytest.mark.parametrize("factors", INTEGER_ZOO_FACTORS, ids=str)
    def test_restricted_quantifier_matches_full_sweep(self, check, factors):
        module = abelian_group(factors)
        sweep = 4 * max(module.exponent, 1)
        assert check(module).verdict == check(module, integer_sweep=sweep).verdict

    def test_sweep_finds_same_witness_kernel(self):
        module = abelian_group([2, 4])
        restricted = is_absolutely_self_pure(module)
        swept = is_absolutely_self_pure(module, integer_sweep=16)
        assert not restricted.verdict and not swept.verdict
        assert revalidate_failure(swept.failure, filter_closure(module))


class TestRings:
    @pytest.mark.parametrize(
        "ring, expected",
        [
            (make_cyclic_ring(1), True),
            (make_cyclic_ring(6), True),
            (make_product_ring(make_cyclic_ring(2), make_cyclic_ring(2)), True),
            (make_cyclic_ring(4), False),
            (make_cyclic_ring(8), False),
        ],
    )
    def test_regular_and_semisimple_agree(self, ring, expected):
        assert is_regular_ring(ring).verdict is expected
        assert is_semisimple_ring(ring).verdict is expected

    def test_witness(self):
        verdict = is_regular_ring(make_cyclic_ring(4))
        assert verdict.witness.label == "{0,2}"
        assert verdict.model_dump(mode="json")["witness"] == "{0,2}"

    def test_integers_rejected(self):
        with pytest.raises(UnsupportedRingError):
            is_semisimple_ring(INTEGERS)

    def test_cross_check(self, mocker):
        mocker.patch(
            "app.domain.purity.service.is_regular_ring",
            return_value=RingVerdict(property="regular", ring="Z_6", verdict=False),
        )
        with pytest.raises(InvariantViolationError):
            is_semisimple_ring(make_cyclic_ring(6))
        assert is_semisimple_ring(make_cyclic_ring(6), cross_check=False).verdict
