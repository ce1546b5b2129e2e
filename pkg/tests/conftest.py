import time

import pytest

_LINES: list[str] = []


class _Criterion:
    def __init__(self, label: str, limit: float | None):
        self.label = label
        self.limit = limit

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        slow = self.limit is not None and elapsed > self.limit
        ok = exc_type is None and not slow
        detail = f"{elapsed:.2f}s" + (f" (limit {self.limit:g}s)" if self.limit else "")
        if exc_type is not None:
            detail += f"  {exc_type.__name__}: {str(exc).splitlines()[0] if str(exc) else ''}"
        line = f"{'PASS' if ok else 'FAIL'}  {self.label}  [{detail}]"
        _LINES.append(line)
        print(line)
        if exc_type is None and slow:
            raise AssertionError(f"{self.label}: took {elapsed:.2f}s, limit {self.limit:g}s")
        return False


@pytest.fixture
def criterion():
    """``with criterion("label", limit_seconds): ...`` records one PASS/FAIL line."""
    return _Criterion


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for line in _LINES:
            terminalreporter.write_line(line)
