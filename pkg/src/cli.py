# src/cli.py
"""
mjuggle: count multiplex juggling patterns from the command line.

    mjuggle cards --balls 3
    mjuggle count --balls 5 --period 15
    mjuggle table --balls 2..5 --period 1..15 --capacity 3 --format csv
    mjuggle verify --suite all

Results go to stdout (or --output); logs go to stderr.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, NoReturn, Optional, Sequence, Union

import pandas as pd
from pydantic import BaseModel

from src.core.cache import configure_cache, get_cache
from src.core.cards import filtered_cards
from src.core.charpoly import char_poly
from src.core.counting import CountQuery, count, table
from src.core.matrices import TransferKind, Variant, build_transfer
from src.evaluation.structure import (
    charpoly_factor_report,
    conjecture_check,
    submatrix_containment_search,
)
from src.evaluation.verify import SUITES, VerifyOptions, run_verification
from src.tools.records import (
    CardList,
    CardRecord,
    CharPolyRecord,
    ConjectureRecord,
    ContainmentRecord,
    CountRecord,
    FactorRecord,
    MatrixRecord,
    TableRecord,
    kappa_text,
    poly_coefficients,
)
from src.tools.render import render_cards
from src.utils import __version__
from src.utils.config import Settings, load_settings
from src.utils.errors import ExitCode, JugglingError, check_guard
from src.utils.logs import setup_logging

logger = logging.getLogger(__name__)

FORMATS = ("json", "csv", "table")
Payload = Union[BaseModel, Sequence[BaseModel]]


class _Parser(argparse.ArgumentParser):
    """argparse that exits with the usage code instead of 2"""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(ExitCode.USAGE, f"{self.prog}: error: {message}\n")


def parse_range(text: str) -> range:
    """'2..5' -> range(2, 6); '7' -> range(7, 8)"""
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO..HI, got {text!r}")
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


# -- parser -----------------------------------------------------------------


def _global_options() -> argparse.ArgumentParser:
    # SUPPRESS lets the flags sit before or after the subcommand
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--format", choices=FORMATS, help="output format (json)")
    common.add_argument("--output", help="write results to this file")
    common.add_argument("--threads", type=_positive, help="worker threads")
    common.add_argument(
        "--force", action="store_true", help="ignore the feasibility guards"
    )
    common.add_argument("--cache-dir", help="persist computed traces here")
    common.add_argument("--config", help="YAML settings file")
    common.add_argument("--log-level", help="DEBUG, INFO, WARNING, ...")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _global_options()
    parser = _Parser(
        prog="mjuggle",
        description="Exact counts of multiplex juggling patterns.",
        parents=[common],
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("cards", parents=[common], help="list the cards for b balls")
    p.add_argument("--balls", "-b", type=_nonnegative, required=True)
    p.add_argument("--capacity", "-k", type=_positive)
    p.add_argument("--distinct", action="store_true", help="distinct heights only")
    p.add_argument("--svg", help="also draw the cards to this SVG file")

    p = sub.add_parser("matrix", parents=[common], help="print a transfer matrix")
    p.add_argument("--balls", "-b", type=_nonnegative, required=True)
    p.add_argument(
        "--variant", choices=[v.value for v in Variant], default=Variant.PLAIN.value
    )
    p.add_argument("--capacity", "-k", type=_positive)

    p = sub.add_parser("count", parents=[common], help="ss, ms and jp for (b, n)")
    p.add_argument("--balls", "-b", type=_nonnegative, required=True)
    p.add_argument("--period", "-n", type=_positive, required=True)
    p.add_argument("--capacity", "-k", type=_positive)
    p.add_argument("--q", action="store_true", help="refine by crossing number")
    p.add_argument("--distinct", action="store_true", help="distinct heights only")

    p = sub.add_parser("table", parents=[common], help="jp over a grid of (b, n)")
    p.add_argument("--balls", "-b", type=parse_range, required=True)
    p.add_argument("--period", "-n", type=parse_range, required=True)
    p.add_argument("--capacity", "-k", type=_positive)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", choices=["all", *SUITES], default="all")
    p.add_argument("--oracle-balls", type=_nonnegative, default=3)
    p.add_argument("--oracle-period", type=_positive, default=4)
    p.add_argument("--charpoly-balls", type=_nonnegative, default=7)
    p.add_argument("--conjecture-b-max", type=_nonnegative, default=25)
    p.add_argument(
        "--timings", action="store_true", help="include time and memory per check"
    )
    p.add_argument(
        "--checks-file", help="also write every measured check as JSON to this path"
    )

    p = sub.add_parser("charpoly", parents=[common], help="factor det(xI - A_b)")
    p.add_argument("--balls", "-b", type=_nonnegative, required=True)
    p.add_argument(
        "--raw", action="store_true", help="only the coefficients, no factor report"
    )

    p = sub.add_parser(
        "conjecture", parents=[common], help="capacity-2 card count series"
    )
    p.add_argument("--b-max", type=_nonnegative, default=25)

    p = sub.add_parser(
        "containment", parents=[common], help="A_{b-1} inside A_b as a submatrix"
    )
    p.add_argument("--balls", "-b", type=_positive, required=True)
    p.add_argument("--limit", type=_positive, default=10_000)
    return parser


# -- output -----------------------------------------------------------------


def _records(payload: Payload) -> List[Dict[str, Any]]:
    items = payload if isinstance(payload, (list, tuple)) else [payload]
    return [m.model_dump(by_alias=True) for m in items]


def _frame(payload: Payload) -> pd.DataFrame:
    rows = []
    for record in _records(payload):
        rows.append(
            {
                k: json.dumps(v) if isinstance(v, (list, dict)) else v
                for k, v in record.items()
            }
        )
    return pd.DataFrame(rows)


def render(payload: Payload, fmt: str, pivot: bool = False) -> str:
    """Serialize records as JSON, CSV or an aligned text table"""
    if fmt == "json":
        if isinstance(payload, BaseModel):
            return payload.model_dump_json(indent=2, by_alias=True)
        return json.dumps(_records(payload), indent=2)
    frame = _frame(payload)
    if fmt == "csv":
        return frame.to_csv(index=False).rstrip("\n")
    if pivot and not frame.empty:
        # n down the rows, b across the columns
        grid = frame.pivot(index="n", columns="b", values="jp")
        grid.columns = [f"b={b}" for b in grid.columns]
        return grid.to_string()
    return frame.to_string(index=False)


def emit(text: str, output: Optional[str]) -> None:
    if output:
        path = Path(output)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text + "\n", encoding="utf-8")
        logger.info(f"Wrote {path}")
    else:
        sys.stdout.write(text + "\n")


# -- commands ---------------------------------------------------------------


def _matrix_guard(b: int, settings: Settings, force: bool) -> None:
    check_guard(
        "max_matrix_balls",
        b,
        settings.max_matrix_balls,
        force,
        f"A_b has 2^(b-1) = {2 ** max(b - 1, 0)} rows",
    )


def cmd_cards(args, settings: Settings, force: bool) -> Payload:
    _matrix_guard(args.balls, settings, force)
    cards = filtered_cards(args.balls, args.capacity, args.distinct)
    if args.svg:
        render_cards(cards, args.svg)
    logger.info(f"{len(cards)} cards for b={args.balls}")
    if args.format != "json":
        return [CardRecord.from_card(c) for c in cards]
    return CardList(
        b=args.balls,
        kappa=kappa_text(args.capacity),
        distinct=args.distinct,
        count=len(cards),
        cards=[CardRecord.from_card(c) for c in cards],
    )


def cmd_matrix(args, settings: Settings, force: bool) -> Payload:
    _matrix_guard(args.balls, settings, force)
    kind = TransferKind.from_variant(args.variant, args.capacity)
    return MatrixRecord.from_matrix(args.balls, kind, build_transfer(args.balls, kind))


def cmd_count(args, settings: Settings, force: bool) -> Payload:
    _matrix_guard(args.balls, settings, force)
    query = CountQuery(
        balls=args.balls,
        period=args.period,
        capacity=args.capacity,
        q_refined=args.q,
        distinct=args.distinct,
    )
    return CountRecord.from_result(count(query))


def cmd_table(args, settings: Settings, force: bool) -> Payload:
    _matrix_guard(max(args.balls), settings, force)
    cells = table(args.balls, args.period, args.capacity, threads=args.threads)
    return [TableRecord.from_cell(c) for c in cells]


def cmd_verify(args, settings: Settings, force: bool) -> Payload:
    opts = VerifyOptions(
        threads=args.threads,
        force=force,
        oracle_max_balls=args.oracle_balls,
        oracle_max_period=args.oracle_period,
        charpoly_max_balls=args.charpoly_balls,
        conjecture_b_max=args.conjecture_b_max,
    )
    # the suite bounds still answer to the configured guards
    for guard, requested in (
        ("max_oracle_balls", opts.oracle_max_balls),
        ("max_oracle_period", opts.oracle_max_period),
        ("max_charpoly_balls", opts.charpoly_max_balls),
    ):
        check_guard(guard, requested, getattr(settings, guard), force)
    return run_verification(
        args.suite, opts, timings=args.timings, checks_file=args.checks_file
    )


def cmd_charpoly(args, settings: Settings, force: bool) -> Payload:
    if args.raw:
        limit = settings.max_charpoly_balls
        check_guard("max_charpoly_balls", args.balls, limit, force)
        p = char_poly(build_transfer(args.balls))
        return CharPolyRecord(b=args.balls, char_poly=poly_coefficients(p))
    report = charpoly_factor_report(
        args.balls, force=force, max_balls=settings.max_charpoly_balls
    )
    return FactorRecord.from_report(report)


def cmd_conjecture(args, settings: Settings, force: bool) -> Payload:
    return ConjectureRecord.from_report(conjecture_check(args.b_max))


def cmd_containment(args, settings: Settings, force: bool) -> Payload:
    report = submatrix_containment_search(
        args.balls,
        force=force,
        max_balls=settings.max_containment_balls,
        limit=args.limit,
    )
    return ContainmentRecord.from_report(report)


COMMANDS = {
    "cards": cmd_cards,
    "matrix": cmd_matrix,
    "count": cmd_count,
    "table": cmd_table,
    "verify": cmd_verify,
    "charpoly": cmd_charpoly,
    "conjecture": cmd_conjecture,
    "containment": cmd_containment,
}


def _settle(args: argparse.Namespace) -> Settings:
    """Settings from file and environment, then the global flags on top"""
    settings = load_settings(getattr(args, "config", None))
    args.format = getattr(args, "format", "json")
    args.output = getattr(args, "output", None)
    args.threads = getattr(args, "threads", settings.threads)
    args.force = getattr(args, "force", False) or settings.force
    cache_dir = getattr(args, "cache_dir", None) or settings.cache_dir
    configure_cache(Path(cache_dir) if cache_dir else None)
    setup_logging(getattr(args, "log_level", settings.log_level), settings.log_file)
    return settings


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        settings = _settle(args)
        logger.debug(f"mjuggle {args.command} with {vars(args)}")
        payload = COMMANDS[args.command](args, settings, args.force)
        pivot = args.command == "table" and args.format == "table"
        emit(render(payload, args.format, pivot=pivot), args.output)
    except JugglingError as e:
        logger.error(str(e))
        return int(e.exit_code)
    except (FileNotFoundError, ValueError) as e:
        logger.error(str(e))
        return int(ExitCode.USAGE)

    get_cache().save()
    if args.command == "verify" and not payload.ok:
        logger.error(f"{payload.failed} of {payload.total} checks failed")
        return int(ExitCode.VERIFICATION_FAILED)
    return int(ExitCode.OK)


if __name__ == "__main__":
    sys.exit(main())
