import re
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

# criterion number -> list of outcomes, filled by test_acceptance
ACCEPTANCE: dict[int, list[bool]] = {}

TITLES = {
    1: "identity suite",
    2: "multilinear dimension 2^n-2 (basis and oracle)",
    3: "product rule agrees with the rewrite oracle",
    4: "commutator identities (n=2..6)",
    5: "anticommutator identities (n=2..6)",
    6: "degree-3 and degree-4 independence",
    7: "finite commutative counterexample algebra",
    8: "Lie/Jordan criteria round-trips",
    9: "Lie and Jordan slices by parity",
    10: "Lie expansion formula (n=2..7)",
    11: "Jordan filtration (n=1..4)",
}


CRITERION_RE = re.compile(r"test_criterion_(\d+)")


def pytest_runtest_logreport(report):
    if report.when != "call" and not report.failed:
        return
    m = CRITERION_RE.search(report.nodeid)
    if m:
        ACCEPTANCE.setdefault(int(m.group(1)), []).append(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(TITLES):
        results = ACCEPTANCE.get(k)
        if results is None:
            status = "NOT RUN"
        else:
            status = "PASS" if all(results) else "FAIL"
        terminalreporter.write_line(f"criterion {k:2d}: {status}  {TITLES[k]}")
