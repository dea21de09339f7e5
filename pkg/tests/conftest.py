import os
import sys
from pathlib import Path

# extra self-checks inside the SNF routine; cheap at test sizes
os.environ.setdefault("IMMCLASS_VERIFY_SNF", "1")
sys.path.insert(0, str(Path(__file__).parent))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
