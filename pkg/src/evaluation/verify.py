# src/evaluation/verify.py
"""
Verification suites behind `mjuggle verify`.

Each suite records named checks into a CheckCollector; a check that raises
is recorded as failed with the error text instead of aborting the run.
"""

import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional

from src.core.cards import (
    all_cards,
    card_count,
    card_count_by_first_part,
    card_count_recurrence_check,
    cards_from,
    cards_from_count,
    cards_into,
    cards_into_count,
)
from src.core.charpoly import char_poly, determinant
from src.core.combinatorics import compositions, partition_count
from src.core.counting import (
    classic_jp,
    jp,
    jp_q,
    ss,
    trace_decomposition,
    trace_identities,
    trace_power,
)
from src.core.matrices import (
    TransferKind,
    build_transfer,
    entry_sum,
    evaluate_at,
    permute,
    transfer_trace,
)
from src.core.polynomial import constant_term, evaluate, poly
from src.evaluation import oracle
from src.evaluation.reference_data import (
    CAPACITY2_CARDS,
    CARD_COUNTS,
    JP_TABLES,
    PRINTED_DISTINCT_MATRICES,
    PRINTED_MATRICES,
    PRINTED_ORDERS,
    PRINTED_Q_MATRIX_3,
    TRACES,
)
from src.evaluation.structure import (
    FACTORS,
    capacity2_card_total,
    charpoly_factor_report,
    conjecture_check,
)
from src.monitoring.metrics import CheckCollector
from src.tools.records import CheckRecord, VerifyReport
from src.utils.errors import JugglingError

logger = logging.getLogger(__name__)


@dataclass
class VerifyOptions:
    threads: int = 1
    force: bool = False
    oracle_max_balls: int = 3
    oracle_max_period: int = 4
    charpoly_max_balls: int = 7
    conjecture_b_max: int = 25


def _check(
    collector: CheckCollector,
    name: str,
    parameters: Dict[str, Any],
    expected: Any,
    compute: Callable[[], Any],
) -> None:
    with collector.measure() as m:
        try:
            actual = compute()
            error = None
        except Exception as e:
            error = f"{type(e).__name__}: {e}"
            actual = f"error: {error}"
    collector.record(
        name=name,
        parameters=parameters,
        expected=expected,
        actual=actual,
        passed=error is None and expected == actual,
        measurement=m,
        error=error,
    )
    if error or expected != actual:
        logger.warning(f"check {name} {parameters} failed: {actual} != {expected}")


# -- suites -----------------------------------------------------------------


def suite_census(c: CheckCollector, opts: VerifyOptions) -> None:
    for b, expected in enumerate(CARD_COUNTS):
        _check(c, "card_count", {"b": b}, expected, lambda b=b: card_count(b))
        if b <= 8:
            _check(c, "all_cards", {"b": b}, expected, lambda b=b: len(all_cards(b)))
    _check(
        c,
        "card_recurrence",
        {"b_max": 20},
        True,
        lambda: card_count_recurrence_check(20),
    )
    for b in range(21):
        _check(
            c,
            "card_count_by_first_part",
            {"b": b},
            card_count(b),
            lambda b=b: card_count_by_first_part(b),
        )

    def closed_forms(b: int) -> bool:
        return all(
            len(cards_from(q)) == cards_from_count(q)
            and len(cards_into(q)) == cards_into_count(q)
            for q in compositions(b)
        )

    for b in range(1, 7):
        _check(c, "card_closed_forms", {"b": b}, True, lambda b=b: closed_forms(b))


def suite_golden(c: CheckCollector, opts: VerifyOptions) -> None:
    q_kind = TransferKind(q_weighted=True)
    distinct = TransferKind(distinct=True)

    def printed(b: int, kind: TransferKind = TransferKind()):
        return permute(build_transfer(b, kind), PRINTED_ORDERS[b]).entries

    for b, rows in PRINTED_MATRICES.items():
        _check(c, "transfer_matrix", {"b": b}, rows, lambda b=b: printed(b))
    expected_q = tuple(tuple(poly(e) for e in row) for row in PRINTED_Q_MATRIX_3)
    _check(c, "q_transfer_matrix", {"b": 3}, expected_q, lambda: printed(3, q_kind))
    for b, rows in PRINTED_DISTINCT_MATRICES.items():
        _check(
            c,
            "distinct_transfer_matrix",
            {"b": b},
            rows,
            lambda b=b: printed(b, distinct),
        )
    for b in range(7):
        _check(
            c,
            "q_matrix_at_one",
            {"b": b},
            build_transfer(b).entries,
            lambda b=b: evaluate_at(build_transfer(b, q_kind)).entries,
        )


def suite_traces(c: CheckCollector, opts: VerifyOptions) -> None:
    for b, expected in enumerate(TRACES):
        _check(c, "trace", {"b": b}, expected, lambda b=b: transfer_trace(b))
        _check(
            c,
            "trace_identities",
            {"b": b},
            True,
            lambda b=b: trace_identities(b).passed,
        )
    for kappa in (None, 2, 3):
        for b in range(5):
            for n in range(1, 7):
                _check(
                    c,
                    "trace_decomposition",
                    {"b": b, "n": n, "kappa": kappa},
                    True,
                    lambda b=b, n=n, k=kappa: trace_decomposition(b, n, k).holds,
                )


def suite_tables(c: CheckCollector, opts: VerifyOptions) -> None:
    for kappa, columns in JP_TABLES.items():
        for b, values in columns.items():
            for n, expected in enumerate(values, start=1):
                _check(
                    c,
                    "jp",
                    {"b": b, "n": n, "kappa": kappa},
                    expected,
                    lambda b=b, n=n, k=kappa: jp(b, n, k),
                )
    for b in range(1, 6):
        for n in range(1, 13):
            _check(
                c,
                "capacity_one",
                {"b": b, "n": n},
                classic_jp(b, n),
                lambda b=b, n=n: jp(b, n, 1),
            )
    for b in range(5):
        for n in range(1, 6):
            _check(
                c,
                "jp_q_at_one",
                {"b": b, "n": n},
                jp(b, n),
                lambda b=b, n=n: evaluate(jp_q(b, n), 1),
            )


def suite_oracle(c: CheckCollector, opts: VerifyOptions) -> None:
    guards = {
        "threads": opts.threads,
        "force": opts.force,
        "max_balls": opts.oracle_max_balls,
        "max_period": opts.oracle_max_period,
    }
    kinds = (TransferKind(), TransferKind(kappa=2), TransferKind(distinct=True))

    def walks(b: int, n: int, kind: TransferKind) -> int:
        return len(oracle.enumerate_closed_walks(b, n, kind, **guards))

    for b in range(opts.oracle_max_balls + 1):
        for n in range(1, opts.oracle_max_period + 1):
            params = {"b": b, "n": n}
            for kind in kinds:
                _check(
                    c,
                    "closed_walks",
                    {**params, "kind": str(kind)},
                    trace_power(b, n, kind),
                    lambda b=b, n=n, k=kind: walks(b, n, k),
                )
            _check(
                c,
                "siteswaps",
                params,
                ss(b, n),
                lambda b=b, n=n: len(oracle.enumerate_siteswaps(b, n, **guards)),
            )
            _check(
                c,
                "patterns",
                params,
                jp(b, n),
                lambda b=b, n=n: len(oracle.enumerate_patterns(b, n, **guards)),
            )
            _check(
                c,
                "q_crossings",
                params,
                True,
                lambda b=b, n=n: oracle.verify_q_counts(b, n, **guards).passed,
            )


def suite_charpoly(c: CheckCollector, opts: VerifyOptions) -> None:
    def report_passes(b: int) -> bool:
        report = charpoly_factor_report(
            b, force=opts.force, max_balls=opts.charpoly_max_balls
        )
        return report.passed

    for b in range(opts.charpoly_max_balls + 1):
        _check(c, "factor_report", {"b": b}, True, lambda b=b: report_passes(b))
        # degree of f_b is the number of partitions of b
        _check(
            c,
            "factor_degree",
            {"b": b},
            partition_count(b),
            lambda b=b: FACTORS.degrees[b],
        )
        if b <= 6:
            a = build_transfer(b)
            _check(
                c,
                "constant_term",
                {"b": b},
                (-1) ** a.dim * determinant(a),
                lambda a=a: constant_term(char_poly(a)),
            )


def suite_conjecture(c: CheckCollector, opts: VerifyOptions) -> None:
    b_max = opts.conjecture_b_max
    _check(
        c,
        "capacity2_series",
        {"b_max": b_max},
        True,
        lambda: conjecture_check(b_max).passed,
    )
    capped = TransferKind(kappa=2)
    for b, expected in enumerate(CAPACITY2_CARDS):
        _check(
            c,
            "capacity2_cards",
            {"b": b},
            expected,
            lambda b=b: capacity2_card_total(b),
        )
        if b <= 8:
            _check(
                c,
                "capacity2_matrix_sum",
                {"b": b},
                expected,
                lambda b=b: entry_sum(build_transfer(b, capped)),
            )


SUITES: Dict[str, Callable[[CheckCollector, VerifyOptions], None]] = {
    "census": suite_census,
    "golden": suite_golden,
    "traces": suite_traces,
    "tables": suite_tables,
    "oracle": suite_oracle,
    "charpoly": suite_charpoly,
    "conjecture": suite_conjecture,
}


def run_verification(
    suite: str = "all",
    opts: Optional[VerifyOptions] = None,
    timings: bool = False,
    checks_file: Optional[str] = None,
) -> VerifyReport:
    """
    Run one suite (or all) and return the serialisable report

    With `checks_file` the raw measurements of every check, timings included,
    are also written there as JSON.
    """
    opts = opts or VerifyOptions()
    if suite != "all" and suite not in SUITES:
        raise JugglingError(f"unknown suite {suite!r}; choose from {sorted(SUITES)}")
    names: List[str] = list(SUITES) if suite == "all" else [suite]
    collector = CheckCollector()
    for name in names:
        logger.info(f"Running verification suite: {name}")
        SUITES[name](collector, opts)

    checks = [
        CheckRecord(
            name=r.name,
            parameters={k: _param(v) for k, v in r.parameters.items()},
            expected=r.expected,
            actual=r.actual,
            passed=r.passed,
            duration_ms=r.duration_ms if timings else None,
            memory_delta_mb=r.memory_delta_mb if timings else None,
        )
        for r in collector.history
    ]
    if checks_file:
        collector.save(checks_file)
        logger.info(f"Wrote {len(collector.history)} measurements to {checks_file}")
    summary = collector.summary()
    logger.info(f"Verification {suite}: {summary['passed']}/{summary['count']} passed")
    return VerifyReport(
        suite=suite,
        total=summary["count"],
        passed=summary["passed"],
        failed=summary["failed"],
        checks=checks,
    )


def _param(value: Any) -> Any:
    return "inf" if value is None else value
