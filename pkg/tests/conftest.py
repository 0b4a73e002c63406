"""Session fixtures and hypothesis configuration for the test suite."""

import pytest
from hypothesis import HealthCheck, settings

import helpers

settings.register_profile(
    "suite",
    deadline=None,  # session-cached group builds make first-hit timing lumpy
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def s4():
    return helpers.build("symmetric(4)")


@pytest.fixture(scope="session")
def d6():
    return helpers.build("dihedral(6)")


@pytest.fixture(scope="session")
def c5c4():
    return helpers.build("semidirect_c5_c4")


@pytest.fixture(scope="session")
def q8():
    return helpers.build("quaternion8")


@pytest.fixture(scope="session")
def v4():
    return helpers.build("elementary_abelian(2,2)")


def pytest_terminal_summary(terminalreporter):
    """One visible pass/fail line per acceptance criterion, regardless of
    output capture."""
    rows = []
    for status in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(status, []):
            name = getattr(rep, "nodeid", "").rpartition("::")[2]
            if name.startswith("test_criterion_"):
                tag = name[len("test_criterion_"):].replace("_", "-")
                rows.append((tag, "PASS" if status == "passed" else "FAIL"))
    if rows:
        terminalreporter.write_sep("-", "acceptance criteria")
        for tag, verdict in sorted(rows):
            terminalreporter.write_line(f"criterion {tag}: {verdict}")
