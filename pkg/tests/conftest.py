from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import acceptance_report


def pytest_terminal_summary(terminalreporter, exitstatus, config) -> None:
    if not acceptance_report.RESULTS:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for num in sorted(acceptance_report.RESULTS):
        res = acceptance_report.RESULTS[num]
        verdict = "PASS" if res.passed else "FAIL"
        line = f"ACCEPTANCE: [criterion {num}] {verdict} — {res.title} ({res.elapsed:.2f}s)"
        if not res.passed:
            line += f" :: {res.detail}"
        tr.write_line(line, green=res.passed, red=not res.passed)
