"""Run the acceptance suite and print one PASS/FAIL line per criterion.

    python3 scripts/acceptance_report.py [extra pytest args]
"""

import subprocess
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def main():
    cmd = [sys.executable, "-m", "pytest", "-q", "-p", "no:cacheprovider", str(ROOT / "tests" / "test_acceptance.py")]
    proc = subprocess.run(cmd + sys.argv[1:], cwd=ROOT, capture_output=True, text=True)
    lines = [l for l in proc.stdout.splitlines() if l[:1] == "A" and l.split(" ", 2)[1:2] in (["PASS"], ["FAIL"])]
    print("\n".join(lines) if lines else proc.stdout)
    if proc.returncode and proc.stderr:
        print(proc.stderr, file=sys.stderr)
    return proc.returncode


if __name__ == "__main__":
    sys.exit(main())
