import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One verdict line per acceptance criterion, after capture ends."""
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for num, ok, text in sorted(results):
        verdict = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"[criterion {num:2d}] {verdict}: {text}")
