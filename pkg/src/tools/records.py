# src/tools/records.py
"""Serialized forms of cards, matrices, counts and reports"""

from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field

from src.core.cards import Card
from src.core.counting import CountResult, TableCell
from src.core.matrices import ExactMatrix, PolyMatrix, TransferKind
from src.core.polynomial import Polynomial, coefficients, format_poly
from src.evaluation.structure import ConjectureReport, ContainmentReport, FactorReport

Count = Union[int, Polynomial]


def kappa_text(kappa: Optional[int]) -> str:
    return "inf" if kappa is None else str(kappa)


def big(value: int) -> str:
    return str(int(value))


def poly_coefficients(p: Polynomial) -> List[str]:
    return [str(c) for c in coefficients(p)]


def count_text(value: Count) -> str:
    """Decimal for integers, q-notation for polynomials"""
    return format_poly(value, "q") if isinstance(value, Polynomial) else str(value)


class CardRecord(BaseModel):
    left: List[int]
    right: List[int]
    indices: Optional[List[int]] = Field(None, description="null for the trivial card")
    crossings: int

    @classmethod
    def from_card(cls, card: Card) -> "CardRecord":
        return cls(
            left=list(card.left.parts),
            right=list(card.right.parts),
            indices=None if card.is_trivial else list(card.indices),
            crossings=card.crossings,
        )


class CardList(BaseModel):
    b: int
    kappa: str = "inf"
    distinct: bool = False
    count: int
    cards: List[CardRecord]


class MatrixRecord(BaseModel):
    b: int
    variant: str
    kappa: str = "inf"
    labels: List[List[int]]
    entries: List[List[Union[str, List[str]]]] = Field(
        ..., description="decimal strings, or ascending coefficient lists for q"
    )

    @classmethod
    def from_matrix(
        cls, b: int, kind: TransferKind, matrix: ExactMatrix
    ) -> "MatrixRecord":
        if isinstance(matrix, PolyMatrix):
            entries = [[poly_coefficients(p) for p in row] for row in matrix.entries]
        else:
            entries = [[big(x) for x in row] for row in matrix.entries]
        return cls(
            b=b,
            variant=kind.variant.value,
            kappa=kappa_text(kind.kappa),
            labels=[list(c.parts) for c in matrix.labels or ()],
            entries=entries,
        )


class CountRecord(BaseModel):
    b: int
    n: int
    kappa: str
    q: bool = False
    distinct: bool = False
    ss: str
    ms: str
    jp: str
    provenance: List[str] = []

    @classmethod
    def from_result(cls, result: CountResult) -> "CountRecord":
        q = result.query
        return cls(
            b=q.balls,
            n=q.period,
            kappa=kappa_text(q.capacity),
            q=q.q_refined,
            distinct=q.distinct,
            ss=count_text(result.ss),
            ms=count_text(result.ms),
            jp=count_text(result.jp),
            provenance=list(result.provenance),
        )


class TableRecord(BaseModel):
    b: int
    n: int
    kappa: str
    jp: str

    @classmethod
    def from_cell(cls, cell: TableCell) -> "TableRecord":
        return cls(
            b=cell.balls,
            n=cell.period,
            kappa=kappa_text(cell.capacity),
            jp=big(cell.jp),
        )


class CheckRecord(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    name: str
    parameters: Dict[str, Any] = {}
    expected: str
    actual: str
    passed: bool = Field(..., alias="pass")
    duration_ms: Optional[float] = None
    memory_delta_mb: Optional[float] = None


class VerifyReport(BaseModel):
    suite: str
    total: int
    passed: int
    failed: int
    checks: List[CheckRecord]

    @property
    def ok(self) -> bool:
        return self.failed == 0


class FactorRecord(BaseModel):
    b: int
    char_poly: List[str]
    divided: Dict[str, int]
    residual: Optional[List[str]] = None
    residual_factors: List[int] = []
    expected: Dict[str, str] = {}
    checks: Dict[str, bool] = {}
    failure: Optional[str] = None
    passed: bool
    notes: List[str] = []

    @classmethod
    def from_report(cls, report: FactorReport) -> "FactorRecord":
        return cls(
            b=report.balls,
            char_poly=poly_coefficients(report.char_poly),
            divided={f"f_{i}": e for i, e in report.divided.items()},
            residual=(
                poly_coefficients(report.residual)
                if report.residual is not None
                else None
            ),
            residual_factors=list(report.residual_factors),
            expected={k: big(v) for k, v in report.expected.items()},
            checks=dict(report.checks),
            failure=report.failure,
            passed=report.passed,
            notes=list(report.notes),
        )


class ConjectureRecord(BaseModel):
    b_max: int
    passed: bool
    rows: List[Dict[str, Any]]

    @classmethod
    def from_report(cls, report: ConjectureReport) -> "ConjectureRecord":
        return cls(
            b_max=report.b_max,
            passed=report.passed,
            rows=[
                {
                    "b": r.balls,
                    "series": big(r.series),
                    "cards": big(r.cards),
                    "pass": r.passed,
                }
                for r in report.rows
            ],
        )


class ContainmentRecord(BaseModel):
    b: int
    found: bool
    witness: Optional[List[List[List[int]]]] = None
    triangular: Optional[bool] = None
    ordering: Optional[List[List[int]]] = None
    witnesses_examined: int

    @classmethod
    def from_report(cls, report: ContainmentReport) -> "ContainmentRecord":
        return cls(
            b=report.balls,
            found=report.found,
            witness=(
                [[list(s.parts), list(t.parts)] for s, t in report.witness]
                if report.witness
                else None
            ),
            triangular=report.triangular,
            ordering=(
                [list(c.parts) for c in report.ordering] if report.ordering else None
            ),
            witnesses_examined=report.witnesses_examined,
        )


class CharPolyRecord(BaseModel):
    b: int
    char_poly: List[str] = Field(..., description="ascending coefficients")
