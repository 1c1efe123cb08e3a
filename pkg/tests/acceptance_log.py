"""Collects the one-line verdict of each acceptance criterion for the terminal summary."""

from __future__ import annotations

import time
from contextlib import contextmanager

LINES: list[str] = []


@contextmanager
def criterion(number: int, title: str, limit: float | None = None):
    """Time a criterion, record PASS or FAIL, and fail on a blown time limit."""
    start = time.perf_counter()
    notes: list[str] = []
    try:
        yield notes
    except BaseException as exc:
        elapsed = time.perf_counter() - start
        _record("FAIL", number, title, elapsed, limit, notes + [f"{type(exc).__name__}: {exc}"])
        raise
    elapsed = time.perf_counter() - start
    if limit is not None and elapsed >= limit:
        _record("FAIL", number, title, elapsed, limit, notes + ["time limit exceeded"])
        raise AssertionError(f"criterion {number} took {elapsed:.2f}s, limit {limit}s")
    _record("PASS", number, title, elapsed, limit, notes)


def _record(verdict, number, title, elapsed, limit, notes):
    budget = f" / {limit:g}s" if limit is not None else ""
    detail = f" ({'; '.join(notes)})" if notes else ""
    line = f"{verdict} criterion {number}: {title} [{elapsed:.2f}s{budget}]{detail}"
    LINES.append(line)
    print(line)
