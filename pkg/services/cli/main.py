import argparse
import sys
from typing import Sequence

from app.core import (
    logger,
    settings,
)
from app.core.config import (
    CapacityLimits,
    default_limits,
)
from app.domain.harness import THEOREMS
from app.domain.zoo import ZooScope
from services.cli.commands import (
    CommandResult,
    cmd_check,
    cmd_classify,
    cmd_validate,
    cmd_verify_theorems,
    cmd_zoo_list,
)
from services.cli.document import (
    InputDocumentError,
    ResolvedDocument,
    resolve_document,
)
from services.cli.exc_handlers import handle_exception


def _positive(value: str) -> int:
    number = int(value)
    if number <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return number


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--input", help="JSON input document (UTF-8).")
    parser.add_argument("--format", choices=["text", "json"], default=None, help="Report format.")
    parser.add_argument("--ring-order-cap", type=_positive)
    parser.add_argument("--module-order-cap", type=_positive)
    parser.add_argument("--generator-cap", type=_positive)
    parser.add_argument("--direct-sum-cap", type=_positive)


def _scope_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--ring", action="append", dest="rings", help="Ring spec, repeatable (Z4, Z2xZ2, integers).")
    parser.add_argument("--free-rank-cap", type=_positive)
    parser.add_argument("--chain-depth", type=_positive)
    parser.add_argument("--copies", type=_positive)
    parser.add_argument("--seed", type=int)
    parser.add_argument("--random-supplements", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="purity-workbench",
        description="Exact decisions of self purity and related properties for finite modules.",
    )
    verbs = parser.add_subparsers(dest="verb", required=True)

    classify = verbs.add_parser("classify", help="Four-flag classification of modules.")
    _common(classify)
    classify.add_argument("modules", nargs="*", help="Module names from the input document.")

    check = verbs.add_parser("check", help="Purity verdict for a submodule.")
    _common(check)
    check.add_argument("property", nargs="?", choices=["self-pure", "M-pure", "pure"])
    check.add_argument("names", nargs="*", help="Submodule name, then the test module for M-pure.")
    check.add_argument("--max-vars", type=_positive)
    check.add_argument("--max-eqs", type=_positive)

    verify = verbs.add_parser("verify-theorems", help="Run the theorem harness over the zoo.")
    _common(verify)
    _scope_flags(verify)
    verify.add_argument("--jobs", type=_positive)
    verify.add_argument("--theorem", action="append", dest="theorems", choices=list(THEOREMS))

    zoo = verbs.add_parser("zoo", help="Module zoo.")
    zoo_verbs = zoo.add_subparsers(dest="zoo_verb", required=True)
    zoo_list = zoo_verbs.add_parser("list", help="List the zoo of the scope.")
    _common(zoo_list)
    _scope_flags(zoo_list)

    validate = verbs.add_parser("validate", help="Validate every structure of the input document.")
    _common(validate)
    return parser


def limits_from_args(args: argparse.Namespace) -> CapacityLimits:
    overrides = {
        "ring_order": args.ring_order_cap,
        "module_order": args.module_order_cap,
        "generators": args.generator_cap,
        "direct_sum_order": args.direct_sum_cap,
    }
    return default_limits().model_copy(update={k: v for k, v in overrides.items() if v is not None})


def scope_from_args(args: argparse.Namespace) -> ZooScope:
    """
    Область перебора: ``--module-order-cap`` задает порядок модулей зоопарка.
    """

    return ZooScope.from_settings(
        rings=args.rings,
        module_order_cap=args.module_order_cap,
        free_rank_cap=args.free_rank_cap,
        chain_depth=args.chain_depth,
        copies=args.copies,
        seed=args.seed,
        random_supplements=args.random_supplements,
    )


def _document(args: argparse.Namespace, limits: CapacityLimits, required: bool) -> ResolvedDocument | None:
    if args.input is None:
        if required:
            raise InputDocumentError(f"{args.verb} needs --input")
        return None
    return resolve_document(args.input, limits)


def dispatch(args: argparse.Namespace) -> CommandResult:
    fmt = args.format or settings.report.format
    if args.verb == "verify-theorems" or args.verb == "zoo":
        # в области перебора --module-order-cap ограничивает зоопарк, а не предел перебора
        limits = default_limits().model_copy(
            update={
                k: v
                for k, v in {
                    "ring_order": args.ring_order_cap,
                    "generators": args.generator_cap,
                    "direct_sum_order": args.direct_sum_cap,
                }.items()
                if v is not None
            }
        )
        scope = scope_from_args(args)
        if args.verb == "zoo":
            return cmd_zoo_list(scope, limits, fmt)
        doc = _document(args, limits, required=False)
        return cmd_verify_theorems(scope, limits, fmt, jobs=args.jobs, doc=doc, theorems=args.theorems)

    limits = limits_from_args(args)
    doc = _document(args, limits, required=True)
    if args.verb == "classify":
        return cmd_classify(doc, args.modules, limits, fmt)
    if args.verb == "check":
        if args.names and args.property is None:
            raise InputDocumentError("check needs a property before the names")
        return cmd_check(doc, args.property, args.names, limits, fmt, max_vars=args.max_vars, max_eqs=args.max_eqs)
    return cmd_validate(doc, limits, fmt)


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logger.debug("Command started", verb=args.verb)
    try:
        result = dispatch(args)
    except Exception as ex:
        return handle_exception(ex)

    sys.stdout.write(result.output + "\n")
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
