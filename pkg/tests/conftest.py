"""Collects the per-criterion verdicts of the acceptance suite and prints them at the end of the run."""

VERDICTS = {}


def record(tag, ok, detail=""):
    line = f"{tag} {'PASS' if ok else 'FAIL'}" + (f"  {detail}" if detail else "")
    VERDICTS[tag] = line
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if not VERDICTS:
        return
    terminalreporter.section("acceptance criteria")
    for tag in sorted(VERDICTS, key=lambda t: int(t[1:])):
        terminalreporter.write_line(VERDICTS[tag])
