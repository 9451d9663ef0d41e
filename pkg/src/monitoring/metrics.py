import json
import os
import time
from contextlib import contextmanager
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Any, Dict, Iterator, List, Optional

import psutil


def _rss_mb() -> float:
    return psutil.Process(os.getpid()).memory_info().rss / (1024 * 1024)


@dataclass
class CheckMetrics:
    name: str
    parameters: Dict[str, Any]
    expected: str
    actual: str
    passed: bool
    duration_ms: float
    memory_delta_mb: float
    error: Optional[str] = None


@dataclass
class Measurement:
    """Filled in by CheckCollector.measure once the block exits"""

    duration_ms: float = 0.0
    memory_delta_mb: float = 0.0


class CheckCollector:
    def __init__(self) -> None:
        self.history: List[CheckMetrics] = []

    @contextmanager
    def measure(self) -> Iterator[Measurement]:
        m = Measurement()
        start_mem = _rss_mb()
        start = time.perf_counter()
        try:
            yield m
        finally:
            m.duration_ms = (time.perf_counter() - start) * 1000
            m.memory_delta_mb = _rss_mb() - start_mem

    def record(
        self,
        *,
        name: str,
        parameters: Dict[str, Any],
        expected: Any,
        actual: Any,
        passed: Optional[bool] = None,
        measurement: Optional[Measurement] = None,
        error: Optional[str] = None,
    ) -> CheckMetrics:
        m = measurement or Measurement()
        row = CheckMetrics(
            name=name,
            parameters=parameters,
            expected=str(expected),
            actual=str(actual),
            passed=(expected == actual) if passed is None else passed,
            duration_ms=round(m.duration_ms, 3),
            memory_delta_mb=round(m.memory_delta_mb, 3),
            error=error,
        )
        self.history.append(row)
        return row

    @property
    def failures(self) -> List[CheckMetrics]:
        return [r for r in self.history if not r.passed]

    def summary(self) -> Dict[str, Any]:
        if not self.history:
            return {"count": 0, "passed": 0, "failed": 0}
        d = [r.duration_ms for r in self.history]
        return {
            "count": len(self.history),
            "passed": len(self.history) - len(self.failures),
            "failed": len(self.failures),
            "total_duration_ms": round(sum(d), 3),
            "slowest": max(self.history, key=lambda r: r.duration_ms).name,
            "peak_memory_delta_mb": max(r.memory_delta_mb for r in self.history),
        }

    def save(self, filename: str) -> str:
        Path(filename).parent.mkdir(parents=True, exist_ok=True)
        with open(filename, "w", encoding="utf-8") as f:
            json.dump([asdict(r) for r in self.history], f, indent=2)
        return filename
