from pathlib import Path

import pytest

from mcl import load_kb

DATA = Path(__file__).resolve().parents[1] / "src" / "mcl" / "data"


def fixture_path(name: str) -> Path:
    return DATA / f"{name}.kb"


@pytest.fixture
def kb_of():
    return lambda name: load_kb(fixture_path(name))


ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def record():
    """Store one pass/fail line per acceptance criterion."""

    def put(n: int, ok: bool, detail: str) -> bool:
        ACCEPTANCE[n] = (bool(ok), detail)
        return bool(ok)

    return put


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
