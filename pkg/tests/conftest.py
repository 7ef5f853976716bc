import pytest

# criterion number -> (passed, description, detail); filled by test_acceptance
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE, key=str):
        ok, desc, detail = ACCEPTANCE[num]
        line = f"criterion {num}: {'PASS' if ok else 'FAIL'} - {desc}"
        if detail:
            line += f" ({detail})"
        terminalreporter.write_line(line)


@pytest.fixture
def criterion():
    """Context manager factory that records one acceptance criterion's outcome."""
    from contextlib import contextmanager

    @contextmanager
    def record(num, desc):
        info = {"detail": ""}
        try:
            yield info
        except BaseException as exc:
            ACCEPTANCE[num] = (False, desc, info["detail"] or f"{type(exc).__name__}: {exc}"[:200])
            print(f"criterion {num}: FAIL - {desc}")
            raise
        ACCEPTANCE[num] = (True, desc, info["detail"])
        print(f"criterion {num}: PASS - {desc}")

    return record
