"""The `lattice-tolerances` command.

Exit codes: 0 on success; 1 when the input is not a lattice, a relation
is not a tolerance (or congruence) where one is required, or a check
fails; 2 on malformed input and usage errors; 3 when enumeration would
exceed the cap.
"""

import argparse
import json
import logging
import sys
from collections.abc import Callable, Sequence

from lattice_tolerances.blocks import block_lattice
from lattice_tolerances.construction import build_paired_lattice, verify_theorem1
from lattice_tolerances.errors import (
    CycleDetectedError,
    DocumentError,
    DuplicateLabelError,
    NotACongruenceError,
    NotALatticeError,
    NotAToleranceError,
    TooLargeError,
    UnknownLabelError,
    UnknownNameError,
)
from lattice_tolerances.lattice import Lattice
from lattice_tolerances.quotient import verify_theorem2_converse, verify_theorem2_forward
from lattice_tolerances.relations import (
    BinaryRelation,
    EnumerationConfig,
    enumerate_congruences,
    enumerate_tolerances,
)
from lattice_tolerances.report import VerificationReport
from lattice_tolerances.sweep import THEOREMS, SweepConfig, relation_name, sweep
from lattice_tolerances.testing import corpus

from .document import LatticeDocument, load_document
from .dot import blocks_dot, block_lattice_dot, hasse_dot, paired_lattice_dot

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_TOO_LARGE = 3

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
VIEWS = ("hasse", "blocks", "block-lattice", "K")

logger = logging.getLogger(__name__)


def setup_logging(level: str = "WARNING") -> None:
    """Send log records to standard error, keeping standard output for
    reports and DOT text."""
    logging.basicConfig(level=level.upper(), format=LOG_FORMAT, stream=sys.stderr)


def _error(message: str) -> None:
    print(f"lattice-tolerances: error: {message}", file=sys.stderr)


def _enumeration_config(args: argparse.Namespace) -> EnumerationConfig:
    return EnumerationConfig(cap=args.cap, max_workers=args.workers)


def _load(args: argparse.Namespace) -> tuple[LatticeDocument, Lattice]:
    document = load_document(args.file)
    return document, document.to_lattice()


def _format_relation(lattice: Lattice, relation: BinaryRelation) -> str:
    labels = lattice.labels
    pairs = ", ".join(f"({labels[x]},{labels[y]})" for x, y in relation.nondiagonal_pairs())
    return "{" + pairs + "}"


def _print_reports(reports: Sequence[VerificationReport], as_json: bool) -> int:
    for report in reports:
        if as_json:
            print(json.dumps(report.to_dict(), ensure_ascii=False))
        else:
            print(report.format())
    passed = sum(report.passed for report in reports)
    if not as_json:
        print(f"{passed}/{len(reports)} passed")
    return EXIT_OK if passed == len(reports) else EXIT_FAILED


def cmd_validate(args: argparse.Namespace) -> int:
    """Check that the document describes a lattice and describe it."""
    document = load_document(args.file)
    try:
        lattice = document.to_lattice()
    except NotALatticeError as e:
        print(f"not a lattice: {e.x} and {e.y} {e.witness}")
        return EXIT_FAILED
    labels = lattice.labels
    print(f"lattice: {len(lattice)} elements")
    print(f"height: {lattice.height()}")
    print(f"bottom: {labels[lattice.bottom]}, top: {labels[lattice.top]}")
    print(f"distributive: {'yes' if lattice.is_distributive() else 'no'}")
    print(f"modular: {'yes' if lattice.is_modular() else 'no'}")
    return EXIT_OK


def cmd_tolerances(args: argparse.Namespace) -> int:
    """List the tolerances (or congruences) in canonical order."""
    _, lattice = _load(args)
    config = _enumeration_config(args)
    if args.congruences_only:
        relations, kind = enumerate_congruences(lattice, config), "congruences"
    else:
        relations, kind = enumerate_tolerances(lattice, config), "tolerances"
    if args.count_only:
        print(len(relations))
        return EXIT_OK
    for i, relation in enumerate(relations):
        print(f"{i}: {_format_relation(lattice, relation)}")
    print(f"{len(relations)} {kind}")
    return EXIT_OK


def _single_case_reports(
    args: argparse.Namespace, document: LatticeDocument, lattice: Lattice
) -> list[VerificationReport]:
    relation = document.relation(lattice, args.relation, close=args.close)
    tag = f"{document.name} [{relation_name(lattice, relation)}]"
    match args.theorem:
        case "1":
            return [verify_theorem1(lattice, relation, f"theorem1 {tag}")]
        case "2conv":
            return [verify_theorem2_converse(lattice, relation, f"theorem2conv {tag}")]
        case _:
            if args.gamma is not None:
                gammas = [document.relation(lattice, args.gamma, close=args.close)]
            else:
                gammas = enumerate_congruences(lattice, _enumeration_config(args))
            return [
                verify_theorem2_forward(
                    lattice,
                    relation,
                    gamma,
                    f"theorem2 {document.name} [alpha: "
                    f"{relation_name(lattice, relation)}; gamma: "
                    f"{relation_name(lattice, gamma)}]",
                )
                for gamma in gammas
            ]


def cmd_verify(args: argparse.Namespace) -> int:
    """Verify a theorem for one relation or for every enumerated case."""
    if args.gamma is not None and args.theorem != "2":
        _error("--gamma only applies to --theorem 2")
        return EXIT_USAGE
    document, lattice = _load(args)
    if args.all_tolerances:
        config = SweepConfig(
            enumeration=_enumeration_config(args),
            max_workers=args.workers,
            skip_too_large=False,
        )
        reports = sweep(args.theorem, {document.name: lattice}, config)
    else:
        reports = _single_case_reports(args, document, lattice)
    return _print_reports(reports, args.json)


def cmd_dot(args: argparse.Namespace) -> int:
    """Print a DOT digraph of the chosen view."""
    document, lattice = _load(args)
    if args.view == "hasse":
        print(hasse_dot(lattice, document.name), end="")
        return EXIT_OK
    if args.relation is None:
        _error(f"--view {args.view} requires --relation")
        return EXIT_USAGE
    rho = document.relation(lattice, args.relation, close=args.close)
    match args.view:
        case "blocks":
            text = blocks_dot(block_lattice(lattice, rho), document.name)
        case "block-lattice":
            text = block_lattice_dot(block_lattice(lattice, rho), f"{document.name}/rho")
        case _:
            text = paired_lattice_dot(build_paired_lattice(lattice, rho), "K")
    print(text, end="")
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    """Run verification sweeps over the built-in corpus."""
    lattices = corpus()
    if args.lattice:
        unknown = [name for name in args.lattice if name not in lattices]
        if unknown:
            raise UnknownNameError(unknown[0])
        lattices = {name: lattices[name] for name in args.lattice}
    config = SweepConfig(
        enumeration=_enumeration_config(args), max_workers=args.workers
    )
    theorems = THEOREMS if args.theorem == "all" else (args.theorem,)
    reports = [report for theorem in theorems for report in sweep(theorem, lattices, config)]
    return _print_reports(reports, args.json)


def _count(minimum: int) -> Callable[[str], int]:
    def parse(text: str) -> int:
        value = int(text)
        if value < minimum:
            raise argparse.ArgumentTypeError(f"must be at least {minimum}")
        return value

    return parse


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--log-level",
        default="WARNING",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        type=str.upper,
    )
    common.add_argument(
        "--cap",
        type=_count(0),
        default=EnumerationConfig().cap,
        help="Maximal number of unordered pairs for brute-force enumeration.",
    )
    common.add_argument("--workers", type=_count(1), default=1)

    relation = argparse.ArgumentParser(add_help=False)
    relation.add_argument("--relation", metavar="NAME")
    relation.add_argument(
        "--close",
        action="store_true",
        help="Use the smallest tolerance containing the named pairs.",
    )

    parser = argparse.ArgumentParser(
        prog="lattice-tolerances",
        description="Verify that lattice tolerances are images of congruences.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    validate = subparsers.add_parser("validate", parents=[common])
    validate.add_argument("file")
    validate.set_defaults(handler=cmd_validate)

    tolerances = subparsers.add_parser("tolerances", parents=[common])
    tolerances.add_argument("file")
    tolerances.add_argument("--congruences-only", action="store_true")
    tolerances.add_argument("--count-only", action="store_true")
    tolerances.set_defaults(handler=cmd_tolerances)

    verify = subparsers.add_parser("verify", parents=[common, relation])
    verify.add_argument("file")
    verify.add_argument("--all-tolerances", action="store_true")
    verify.add_argument("--gamma", metavar="NAME")
    verify.add_argument("--theorem", choices=THEOREMS, default="1")
    verify.add_argument("--json", action="store_true")
    verify.set_defaults(handler=cmd_verify)

    dot = subparsers.add_parser("dot", parents=[common, relation])
    dot.add_argument("file")
    dot.add_argument("--view", choices=VIEWS, default="hasse")
    dot.set_defaults(handler=cmd_dot)

    sweep_parser = subparsers.add_parser("sweep", parents=[common])
    sweep_parser.add_argument("--theorem", choices=[*THEOREMS, "all"], default="all")
    sweep_parser.add_argument(
        "--lattice", action="append", metavar="NAME", help="Restrict to corpus lattices."
    )
    sweep_parser.add_argument("--json", action="store_true")
    sweep_parser.set_defaults(handler=cmd_sweep)
    return parser


def _dispatch(handler: Callable[[argparse.Namespace], int], args: argparse.Namespace) -> int:
    try:
        return handler(args)
    except (OSError, DocumentError, DuplicateLabelError, UnknownLabelError, UnknownNameError) as e:
        _error(str(e))
        return EXIT_USAGE
    except TooLargeError as e:
        _error(str(e))
        return EXIT_TOO_LARGE
    except (
        NotALatticeError,
        CycleDetectedError,
        NotAToleranceError,
        NotACongruenceError,
    ) as e:
        _error(str(e))
        return EXIT_FAILED


def run(argv: Sequence[str] | None = None) -> int:
    """Parse `argv` and run the selected subcommand, returning the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    if args.command == "verify" and args.relation is None and not args.all_tolerances:
        _error("verify requires --relation or --all-tolerances")
        return EXIT_USAGE
    if args.command == "verify" and args.relation is not None and args.all_tolerances:
        _error("--relation and --all-tolerances are mutually exclusive")
        return EXIT_USAGE
    setup_logging(args.log_level)
    logger.debug(f"Running '{args.command}'")
    return _dispatch(args.handler, args)


def main() -> None:
    """Entry point of lattice-tolerances."""
    sys.exit(run())


if __name__ == "__main__":
    main()
