import pytest

_RESULTS = pytest.StashKey[dict]()
CRITERIA = range(1, 12)


@pytest.fixture
def criterion(request):
    """Record and assert one acceptance criterion."""
    store = request.config.stash.setdefault(_RESULTS, {})

    def record(n: int, ok: bool, detail: str = ""):
        store[n] = (ok, detail)
        print(_line(n, ok, detail))
        assert ok, detail

    return record


def _line(n, ok, detail):
    return f"{'PASS' if ok else 'FAIL'} criterion {n}" + (f": {detail}" if detail else "")


def pytest_terminal_summary(terminalreporter, config):
    store = config.stash.get(_RESULTS, None)
    if store is None:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for n in CRITERIA:
        ok, detail = store.get(n, (False, "did not run to completion"))
        terminalreporter.write_line(_line(n, ok, detail))
