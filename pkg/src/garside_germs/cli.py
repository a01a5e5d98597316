"""Command-line interface: `garside-germs <command> ...`.

Every command prints a JSON Report on stdout. Exit codes: 0 success, 1 a
clean negative verdict (invalid germ, not a Garside germ), 2 a structural or
input error.
"""

import argparse
import logging
import sys
import time
from collections.abc import Callable, Iterable, Sequence
from contextlib import contextmanager

from pydantic import ValidationError

from .analyzer import closure_report, is_garside_germ, lcm_criteria, noetherian_report, verify_laws
from .category import GermCategory
from .config import DEFAULT_ENUMERATE_LIMIT, Config
from .coxeter import classical_germ, dual_germ
from .errors import GermError, PreconditionError, UnsupportedGermError
from .germ import GermTable, validate_germ
from .germfile import describe_validation_error, dump_germ, load_germ
from .models import CoxeterSpec, Report
from .version import __version__

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2


class Timer:
    """Collects wall-clock seconds per phase."""

    def __init__(self) -> None:
        self.timings: dict[str, float] = {}

    @contextmanager
    def phase(self, name: str):
        start = time.perf_counter()
        try:
            yield
        finally:
            self.timings[name] = round(time.perf_counter() - start, 6)


def _names(table: GermTable, ids: Iterable[int]) -> list[str]:
    return [table.name(i) for i in ids]


def cmd_validate(args: argparse.Namespace) -> tuple[Report, int]:
    timer = Timer()
    with timer.phase("load"):
        table = load_germ(args.file)
    with timer.phase("validate"):
        report = validate_germ(table)
    result = Report(
        command="validate",
        file=str(args.file),
        verdicts={"valid": report.valid, "size": table.size},
        witnesses={key: _names(table, found[0]) for key, found in report.counterexamples.items()},
        timings=timer.timings,
    )
    return result, EXIT_OK if report.valid else EXIT_NEGATIVE


def cmd_analyze(args: argparse.Namespace) -> tuple[Report, int]:
    timer = Timer()
    with timer.phase("load"):
        table = load_germ(args.file)
    result = Report(command="analyze", file=str(args.file), verdicts={"size": table.size})

    with timer.phase("axioms"):
        axioms = table.report
    result.verdicts["valid"] = axioms.valid
    for key, found in axioms.counterexamples.items():
        result.witnesses[key] = _names(table, found[0])
    if not axioms.valid:
        result.verdicts["is_garside"] = False
        result.verdicts["failed_criterion"] = "not-a-germ"
        result.timings = timer.timings
        return result, EXIT_NEGATIVE

    result.verdicts.update(
        left_associative=axioms.left_associative,
        right_associative=axioms.right_associative,
        left_cancellative=axioms.left_cancellative,
        right_cancellative=axioms.right_cancellative,
    )
    result.details["invertibles"] = _names(table, sorted(axioms.invertibles))
    result.details["atoms"] = _names(table, sorted(axioms.atoms))

    with timer.phase("garside"):
        verdict = is_garside_germ(table)
    result.verdicts["is_garside"] = verdict.is_garside
    result.verdicts["failed_criterion"] = (
        verdict.failed_criterion.value if verdict.failed_criterion else None
    )
    if verdict.witness:
        result.witnesses["garside"] = _names(table, verdict.witness)

    if args.laws and verdict.j_table is not None and verdict.j_table.is_total:
        with timer.phase("laws"):
            laws = verify_laws(table, verdict.j_table)
        result.verdicts.update(j_law=laws.j_law, i_law=laws.i_law, h_law=laws.h_law)
        result.details["triples_checked"] = laws.triples_checked
        for law, violation in laws.violations.items():
            result.witnesses[f"{law}_law"] = _names(table, violation.triple)

    if args.noetherian:
        with timer.phase("noetherian"):
            noetherian = noetherian_report(table)
        result.verdicts.update(
            left_noetherian=noetherian.left_noetherian,
            right_noetherian=noetherian.right_noetherian,
        )
        if noetherian.left_cycle:
            result.witnesses["left_noetherian"] = _names(table, noetherian.left_cycle)
        if noetherian.right_cycle:
            result.witnesses["right_noetherian"] = _names(table, noetherian.right_cycle)
        with timer.phase("lcm"):
            lcms = lcm_criteria(table)
        result.details["lcm"] = lcms.model_dump(exclude={"witnesses"})
        for key, witness in lcms.witnesses.items():
            result.witnesses[f"lcm_{key}"] = _names(table, witness)
        if axioms.left_associative and axioms.left_cancellative:
            with timer.phase("closure"):
                closure = closure_report(table)
            result.details["closure"] = closure.model_dump(exclude={"witnesses"})
            for key, witness in closure.witnesses.items():
                result.witnesses[f"closure_{key}"] = _names(table, witness)

    result.timings = timer.timings
    return result, EXIT_OK if verdict.is_garside else EXIT_NEGATIVE


def cmd_nf(args: argparse.Namespace) -> tuple[Report, int]:
    timer = Timer()
    with timer.phase("load"):
        table = load_germ(args.file)
    with timer.phase("prepare"):
        category = GermCategory(table)
    with timer.phase("normal_form"):
        word = category.word(args.word, args.object)
        nf = category.normal_form(word)
    result = Report(
        command="nf",
        file=str(args.file),
        verdicts={"s_length": category.s_length(nf)},
        details={"input": word.names(table), "normal_form": nf.names(table)},
        timings=timer.timings,
    )
    return result, EXIT_OK


def cmd_wp(args: argparse.Namespace) -> tuple[Report, int]:
    timer = Timer()
    with timer.phase("load"):
        table = load_germ(args.file)
    with timer.phase("prepare"):
        category = GermCategory(table)
    with timer.phase("word_problem"):
        w1 = category.word(args.word1, args.object)
        w2 = category.word(args.word2, args.object)
        equal = category.word_problem(w1, w2)
        nf1, nf2 = category.normal_form(w1), category.normal_form(w2)
    result = Report(
        command="wp",
        file=str(args.file),
        verdicts={"equal": equal},
        details={"normal_forms": [nf1.names(table), nf2.names(table)]},
        timings=timer.timings,
    )
    return result, EXIT_OK


def _indices(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise PreconditionError(f"Coxeter element order must list integer indices, got {text!r}") from None


def cmd_derive(args: argparse.Namespace) -> tuple[Report, int]:
    timer = Timer()
    spec = CoxeterSpec(family=args.family, rank=args.rank)
    order = None
    if args.coxeter_order:
        if args.flavor == "classical":
            raise PreconditionError("--coxeter-order only applies to the dual flavor")
        order = _indices(args.coxeter_order)
    with timer.phase("derive"):
        if args.flavor == "classical":
            table = classical_germ(spec)
        else:
            table = dual_germ(spec, order)
    with timer.phase("write"):
        dump_germ(table, args.output)
    result = Report(
        command="derive",
        file=str(args.output),
        verdicts={"size": table.size, "is_garside": True},
        details={"family": spec.family, "rank": spec.rank, "flavor": args.flavor, "coxeter_order": order},
        timings=timer.timings,
    )
    return result, EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> tuple[Report, int]:
    timer = Timer()
    with timer.phase("load"):
        table = load_germ(args.file)
    with timer.phase("prepare"):
        category = GermCategory(table, Config(enumerate_limit=args.limit))
    with timer.phase("enumerate"):
        counts = category.count_by_length(args.max)
    result = Report(
        command="enumerate",
        file=str(args.file),
        verdicts={"total": sum(counts)},
        details={"counts": counts},
        timings=timer.timings,
    )
    return result, EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="garside-germs",
        description="Recognize Garside germs, compute normal forms, derive Coxeter germs",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--verbose", "-v", action="store_true", help="Debug logging on stderr")
    commands = parser.add_subparsers(dest="command", required=True)

    validate = commands.add_parser("validate", help="Check the germ axioms")
    validate.add_argument("file")
    validate.set_defaults(handler=cmd_validate)

    analyze = commands.add_parser("analyze", help="Decide whether the germ is a Garside germ")
    analyze.add_argument("file")
    analyze.add_argument("--laws", action="store_true", help="Check the sharp I/J/H laws")
    analyze.add_argument(
        "--noetherian", action="store_true", help="Noetherian, lcm and closure criteria"
    )
    analyze.set_defaults(handler=cmd_analyze)

    nf = commands.add_parser("nf", help="Normal form of a word")
    nf.add_argument("file")
    nf.add_argument("--word", required=True, help="Comma-separated element names")
    nf.add_argument("--object", help="Object of the empty word")
    nf.set_defaults(handler=cmd_nf)

    wp = commands.add_parser("wp", help="Decide whether two words are equal")
    wp.add_argument("file")
    wp.add_argument("word1")
    wp.add_argument("word2")
    wp.add_argument("--object", help="Object of empty words")
    wp.set_defaults(handler=cmd_wp)

    derive = commands.add_parser("derive", help="Write a germ derived from a Coxeter group")
    derive.add_argument("--family", required=True, choices=["A", "B", "I2"])
    derive.add_argument("--rank", required=True, type=int)
    derive.add_argument("--flavor", required=True, choices=["classical", "dual"])
    derive.add_argument("--coxeter-order", help="Comma-separated simple reflection indices")
    derive.add_argument("-o", "--output", required=True)
    derive.set_defaults(handler=cmd_derive)

    enumerate_ = commands.add_parser("enumerate", help="Count elements by S-length")
    enumerate_.add_argument("file")
    enumerate_.add_argument("--max", required=True, type=int)
    enumerate_.add_argument("--limit", type=int, default=DEFAULT_ENUMERATE_LIMIT)
    enumerate_.set_defaults(handler=cmd_enumerate)
    return parser


def _error_report(args: argparse.Namespace, kind: str, message: str) -> Report:
    path = getattr(args, "file", None) or getattr(args, "output", None)
    return Report(
        command=args.command,
        file=str(path) if path else None,
        verdicts={"error": kind},
        details={"message": message},
    )


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verbose:
        logging.basicConfig(level=logging.DEBUG, format="%(levelname)s %(name)s: %(message)s")

    handler: Callable[[argparse.Namespace], tuple[Report, int]] = args.handler
    try:
        report, code = handler(args)
    except UnsupportedGermError as e:
        report = _error_report(args, e.criterion or "unsupported", str(e))
        code = EXIT_NEGATIVE
    except ValidationError as e:
        report = _error_report(args, "invalid-input", describe_validation_error(e))
        code = EXIT_ERROR
    except (GermError, OSError) as e:
        logger.debug("Command %s failed", args.command, exc_info=True)
        report = _error_report(args, type(e).__name__, str(e))
        code = EXIT_ERROR
    sys.stdout.write(report.model_dump_json(indent=2) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
