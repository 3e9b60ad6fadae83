"""Pass/fail results carrying explicit combinatorial witnesses.

Every checker in the package returns a :class:`Verdict` rather than a bare
boolean: a failing verdict always names the offending configuration (a
cycle, a wheel, a dwheel, a simplex, or a condition-instance record) so it
can be re-validated independently.
"""

from __future__ import annotations

import functools
import time
from dataclasses import dataclass, field
from typing import Any


def witness_json(obj: Any) -> Any:
    """Best-effort JSON form of a witness object."""
    if obj is None:
        return None
    to_json = getattr(obj, "to_json", None)
    if callable(to_json):
        return to_json()
    if isinstance(obj, (frozenset, set)):
        return [witness_json(x) for x in sorted(obj)]
    if isinstance(obj, (list, tuple)):
        return [witness_json(x) for x in obj]
    if isinstance(obj, dict):
        return {str(k): witness_json(v) for k, v in obj.items()}
    return obj


@dataclass(frozen=True)
class Verdict:
    """Outcome of one check.

    ``witness`` is present whenever ``passed`` is False.  ``stats`` holds
    counts gathered during the check (enumerated objects, instances tried).
    """

    check: str
    passed: bool
    detail: str = ""
    witness: Any = None
    stats: dict = field(default_factory=dict)

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def __bool__(self) -> bool:
        return self.passed

    def to_json(self, with_timings: bool = False) -> dict:
        stats = dict(self.stats)
        if not with_timings:
            stats.pop("elapsed_ms", None)
        return {
            "check": self.check,
            "status": self.status,
            "detail": self.detail,
            "witness": witness_json(self.witness),
            "stats": stats,
        }


def passed(check: str, detail: str = "", **stats) -> Verdict:
    return Verdict(check=check, passed=True, detail=detail, stats=stats)


def failed(check: str, witness: Any, detail: str = "", **stats) -> Verdict:
    return Verdict(check=check, passed=False, detail=detail, witness=witness, stats=stats)


def timed(fn):
    """Record wall time in the returned verdict's stats."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        start = time.perf_counter()
        out = fn(*args, **kwargs)
        if isinstance(out, Verdict):
            out.stats.setdefault("elapsed_ms", round((time.perf_counter() - start) * 1000, 3))
        return out

    return wrapper
