from __future__ import annotations

import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def pytest_terminal_summary(terminalreporter):
    """One PASS/FAIL line per acceptance criterion at the end of a run."""
    lines = {}
    for status in ("passed", "failed", "skipped"):
        for report in terminalreporter.stats.get(status, []):
            nodeid = getattr(report, "nodeid", "")
            if "test_acceptance.py" not in nodeid:
                continue
            if getattr(report, "when", "call") != "call" and status != "skipped":
                continue
            lines[nodeid.split("::")[-1]] = status.upper()
    if lines:
        terminalreporter.write_sep("-", "acceptance criteria")
        for name, status in sorted(lines.items()):
            label = {"PASSED": "PASS", "FAILED": "FAIL", "SKIPPED": "SKIP"}[status]
            terminalreporter.write_line(f"{label}  {name}")