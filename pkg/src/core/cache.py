# src/core/cache.py
import json
import logging
import threading
from pathlib import Path
from typing import Any, Dict, Optional, Union

from src.core.polynomial import Polynomial, coefficients, poly

logger = logging.getLogger(__name__)

Value = Union[int, Polynomial]

CACHE_FILENAME = "traces.json"


def _encode(value: Value) -> Dict[str, Any]:
    if isinstance(value, Polynomial):
        return {"poly": [str(c) for c in coefficients(value)]}
    return {"int": str(value)}


def _decode(raw: Dict[str, Any]) -> Value:
    if "poly" in raw:
        return poly([int(c) for c in raw["poly"]])
    return int(raw["int"])


class TraceCache:
    """
    Memo of trace(A^n) values keyed by (variant, b, kappa, n)

    In-process by default. With a directory the table is loaded from and
    flushed to `<dir>/traces.json` so later runs can reuse it.
    """

    def __init__(self, cache_dir: Optional[Path] = None) -> None:
        self._lock = threading.Lock()
        self._table: Dict[str, Value] = {}
        self.hits = 0
        self.misses = 0
        self.cache_dir = Path(cache_dir) if cache_dir else None
        if self.cache_dir:
            self._load()

    @staticmethod
    def key(variant: str, b: int, kappa: Optional[int], n: int) -> str:
        return f"{variant}:b={b}:kappa={'inf' if kappa is None else kappa}:n={n}"

    def get(self, key: str) -> Optional[Value]:
        with self._lock:
            value = self._table.get(key)
            if value is None:
                self.misses += 1
            else:
                self.hits += 1
            return value

    def put(self, key: str, value: Value) -> None:
        with self._lock:
            self._table[key] = value

    def __len__(self) -> int:
        return len(self._table)

    def clear(self) -> None:
        with self._lock:
            self._table.clear()
            self.hits = self.misses = 0

    def _path(self) -> Path:
        assert self.cache_dir is not None
        return self.cache_dir / CACHE_FILENAME

    def _load(self) -> None:
        path = self._path()
        if not path.exists():
            return
        try:
            with open(path, "r", encoding="utf-8") as f:
                raw = json.load(f)
            self._table.update({k: _decode(v) for k, v in raw.items()})
            logger.debug(f"Loaded {len(raw)} cached traces from {path}")
        except (OSError, ValueError, KeyError) as e:
            logger.warning(f"Ignoring unreadable trace cache {path}: {e}")

    def save(self) -> Optional[str]:
        """Write the table to disk; no-op without a cache directory"""
        if not self.cache_dir:
            return None
        self.cache_dir.mkdir(parents=True, exist_ok=True)
        path = self._path()
        with self._lock:
            payload = {k: _encode(v) for k, v in sorted(self._table.items())}
        with open(path, "w", encoding="utf-8") as f:
            json.dump(payload, f, indent=2)
        logger.debug(f"Saved {len(payload)} traces to {path}")
        return str(path)


_cache = TraceCache()


def get_cache() -> TraceCache:
    return _cache


def configure_cache(cache_dir: Optional[Path] = None) -> TraceCache:
    """Replace the process-wide cache, optionally backed by a directory"""
    global _cache
    _cache = TraceCache(cache_dir)
    return _cache
