import pytest

_ACCEPTANCE = []


@pytest.fixture
def criterion(request):
    """Record ``(number, title, ok, measured)`` for the acceptance summary, then assert."""

    def record(number, title, ok, measured=""):
        _ACCEPTANCE.append((number, title, bool(ok), measured))
        assert ok, f"criterion {number} ({title}) failed: {measured}"

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, measured in sorted(_ACCEPTANCE, key=lambda r: r[0]):
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"[{status}] {number:>2}. {title}  {measured}".rstrip())
