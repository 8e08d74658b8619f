import pytest

from app.domain.algebra import (
    INTEGERS,
    AxiomError,
    DimensionMismatchError,
    FinModule,
    IdealHom,
    LeftIdeal,
    ModHom,
    StructureValidationError,
    cyclic_group,
    ensure_valid,
    make_cyclic_ring,
    regular_module,
    validate,
)
from app.domain.algebra.validators import (
    AbelianGroupValidator,
    ActionValidator,
    ChainValidator,
)
from tests.generators import ModuleGenerator


class TestValidate:
    def test_missing_inverse(self):
        module = FinModule(INTEGERS, [[0, 1], [1, 1]], 0, label="or")
        report = validate(module)
        assert report.kind == "module"
        assert len(report.violations) == 1
        violation = report.violations[0]
        assert violation.axiom == "add_inverse"
        assert violation.witness == [1]
        assert violation.detail == "1 has no additive inverse"

    def test_left_ideal_not_closed(self):
        report = validate(LeftIdeal(make_cyclic_ring(4), [0, 1]))
        assert report.kind == "left_ideal"
        assert "closed_under_addition" in {v.axiom for v in report.violations}

    def test_integer_ideal_is_always_valid(self):
        assert validate(LeftIdeal(INTEGERS, gen=6)).ok

    def test_ideal_hom(self):
        ring = make_cyclic_ring(4)
        bad = IdealHom(ModuleGenerator.ideal(4, [0, 2]), regular_module(ring), images=[0, 1])
        assert [v.axiom for v in validate(bad).violations] == ["additive", "linear"]

        good = IdealHom(ModuleGenerator.ideal(4, [0, 2]), regular_module(ring), images=[0, 2])
        assert validate(good).ok

    def test_zero_ideal_of_integers(self):
        f = IdealHom(LeftIdeal(INTEGERS, gen=0), cyclic_group(4), value=1)
        assert [v.axiom for v in validate(f).violations] == ["zero_ideal_maps_to_zero"]

    @pytest.mark.parametrize(
        "table, ok",
        [
            ([0, 2, 0, 2], True),
            ([0, 1, 0, 1], False),
            ([0, 3, 2, 1], True),
        ],
    )
    def test_module_hom(self, table, ok):
        z4 = cyclic_group(4)
        report = validate(ModHom(z4, z4, table))
        assert report.kind == "module_hom"
        assert report.ok is ok

    def test_unknown_structure(self):
        with pytest.raises(DimensionMismatchError):
            validate("Z_4")


class TestEnsureValid:
    def test_raises_with_report(self):
        with pytest.raises(StructureValidationError) as exc:
            ensure_valid(ModuleGenerator.corrupted_z4_module())
        assert exc.value.report is not None
        assert exc.value.message.startswith("bad violates: ")
        assert exc.value.exit_code == 2

    def test_returns_report(self):
        report = ensure_valid(make_cyclic_ring(5))
        assert report.ok
        assert report.structure == "Z_5"


class TestChainValidator:
    def test_collects_all(self):
        chain = ChainValidator([AbelianGroupValidator(), ActionValidator()])
        ok, errors = chain(ModuleGenerator.corrupted_z4_module())
        assert not ok
        assert [e.violation.axiom for e in errors] == ["action_additive_in_ring", "action_associative"]

    def test_stop_on_first_error(self):
        chain = ChainValidator([ActionValidator()], stop_on_first_error=True)
        with pytest.raises(AxiomError) as exc:
            chain(ModuleGenerator.corrupted_z4_module())
        assert exc.value.violation.axiom == "action_additive_in_ring"

    def test_add(self):
        chain = ChainValidator()
        chain.add(AbelianGroupValidator())
        assert chain(cyclic_group(3)) == (True, [])


class TestValidator:
    def test_violations_lists_every_failed_axiom(self):
        violations = list(ActionValidator().violations(ModuleGenerator.corrupted_z4_module()))
        assert [v.axiom for v in violations] == ["action_additive_in_ring", "action_associative"]

    def test_call_raises_first_violation(self):
        with pytest.raises(AxiomError) as exc:
            ActionValidator()(ModuleGenerator.corrupted_z4_module())
        assert exc.value.violation.axiom == "action_additive_in_ring"

    def test_call_passes_valid_structure(self):
        assert ActionValidator()(cyclic_group(4)) is None
