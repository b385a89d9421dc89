import re
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

_results = {}
_descriptions = {}
_PATTERN = re.compile(r"test_criterion_(\d+)")


def pytest_collection_modifyitems(items):
    for item in items:
        match = _PATTERN.match(item.name)
        if match:
            doc = (getattr(item, "function", None).__doc__ or "").strip()
            first = doc.splitlines()[0] if doc else ""
            _descriptions[int(match.group(1))] = first


def pytest_runtest_logreport(report):
    match = _PATTERN.match(report.nodeid.rsplit("::", 1)[-1])
    if not match:
        return
    num = int(match.group(1))
    if report.when == "call":
        _results[num] = report.passed and _results.get(num, True)
    elif report.failed:
        _results[num] = False


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for num in sorted(_results):
        status = "PASS" if _results[num] else "FAIL"
        desc = _descriptions.get(num, "")
        terminalreporter.write_line(f"criterion {num:2d}: {status}  {desc}")
