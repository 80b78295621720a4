from __future__ import annotations

import pytest

from abideals.rootsys import build

BATTERY = "A1 A2 A3 A4 A5 A6 A7 A8 B2 B3 B4 C2 C3 C4 D4 D5 D6 E6 E7 E8 F4 G2".split()
RANK_LE_8 = (
    [f"A{n}" for n in range(1, 9)]
    + [f"B{n}" for n in range(2, 9)]
    + [f"C{n}" for n in range(2, 9)]
    + [f"D{n}" for n in range(4, 9)]
    + ["E6", "E7", "E8", "F4", "G2"]
)
SMALL = ["A1", "A2", "A3", "B2", "B3", "C2", "C3", "D4", "G2", "F4"]

# criterion number -> (title, passed); filled by test_acceptance
ACCEPTANCE: dict[int, tuple[str, bool]] = {}


@pytest.fixture(params=SMALL)
def small_rs(request):
    return build(request.param)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        title, ok = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {title}")
