"""Shared fixtures and the acceptance-criteria terminal summary."""

from __future__ import annotations

import contextlib

import pytest

# (number, description, status, note) tuples recorded by test_acceptance.
ACCEPTANCE_RESULTS: list = []


@contextlib.contextmanager
def criterion(number: int, description: str, note: str = ""):
    """Record one acceptance criterion as a single pass/fail line."""
    try:
        yield
    except BaseException as exc:
        ACCEPTANCE_RESULTS.append(
            (number, description, "FAIL", f"{type(exc).__name__}: {exc}")
        )
        raise
    ACCEPTANCE_RESULTS.append((number, description, "PASS", note))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, description, status, note in sorted(ACCEPTANCE_RESULTS):
        line = f"[criterion {number:2d}] {status} - {description}"
        if note:
            line += f"  ({note})"
        terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def cache_dir(tmp_path_factory):
    return str(tmp_path_factory.mktemp("bound-cache"))
