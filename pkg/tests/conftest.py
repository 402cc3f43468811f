import pytest

_RESULTS: dict[int, tuple[bool, str]] = {}


class Recorder:
    def __call__(self, criterion: int, ok: bool, detail: str = ""):
        _RESULTS[criterion] = (bool(ok), detail)
        assert ok, f"criterion {criterion}: {detail}"


@pytest.fixture
def record():
    return Recorder()


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_RESULTS):
        ok, detail = _RESULTS[k]
        terminalreporter.write_line(f"ACCEPTANCE criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}")
