import pytest

import spairs as sp

# ---------------------------------------------------------------------------
# Shared expensive fixtures
# ---------------------------------------------------------------------------


@pytest.fixture(scope="session")
def catalog2():
    return sp.enumerate_catalog(2)


@pytest.fixture(scope="session")
def catalog3():
    return sp.enumerate_catalog(3)


@pytest.fixture(scope="session")
def catalog4():
    return sp.enumerate_catalog(4)


@pytest.fixture(scope="session")
def matrices2():
    return list(sp.enumerate_matrices(2))


@pytest.fixture(scope="session")
def all_grids2():
    return list(sp.iter_grids(2))


@pytest.fixture(scope="session")
def census3():
    return sp.run_census(3, workers=1)


@pytest.fixture(scope="session")
def census3_two_workers():
    return sp.run_census(3, workers=2)


@pytest.fixture(scope="session")
def histogram3():
    return sp.degree_histogram(3)


# ---------------------------------------------------------------------------
# Acceptance reporting: tests record per-criterion results; a summary block
# prints one line per criterion at the end of the run.
# ---------------------------------------------------------------------------

_acceptance_records: list[tuple[int, bool, str]] = []


@pytest.fixture(scope="session")
def acceptance_log():
    def record(criterion: int, ok: bool, detail: str) -> None:
        _acceptance_records.append((criterion, ok, detail))

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance_records:
        return
    by_criterion: dict[int, list[tuple[bool, str]]] = {}
    for num, ok, detail in _acceptance_records:
        by_criterion.setdefault(num, []).append((ok, detail))
    terminalreporter.section("acceptance criteria")
    for num in sorted(by_criterion):
        parts = by_criterion[num]
        verdict = "PASS" if all(ok for ok, _ in parts) else "FAIL"
        detail = "; ".join(d for _, d in parts)
        terminalreporter.write_line(f"criterion {num}: {verdict} - {detail}")
