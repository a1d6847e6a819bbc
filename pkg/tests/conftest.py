import os

import pytest

SEED = int(os.environ.get("ORDCORE_SEED", "271828"))

_criteria: dict[int, tuple[str, bool, float]] = {}


class CriterionLog:
    """Collects one pass/fail line per acceptance criterion; the terminal
    summary prints them after the run so they survive output capture."""

    def record(self, num: int, label: str, passed: bool, elapsed: float) -> None:
        _criteria[num] = (label, passed, elapsed)


@pytest.fixture(scope="session")
def criteria() -> CriterionLog:
    return CriterionLog()


@pytest.fixture(scope="session")
def seed() -> int:
    return SEED


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        label, passed, elapsed = _criteria[num]
        verdict = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"criterion {num:2d}: {verdict} ({elapsed:6.1f}s) {label}")
