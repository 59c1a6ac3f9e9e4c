"""Suite-wide wiring: collects acceptance verdicts and prints them at the end."""

ACCEPTANCE_RESULTS: list[str] = []


def record_acceptance(name: str, ok: bool, detail: str = "") -> None:
    verdict = "PASS" if ok else "FAIL"
    line = f"{verdict}  {name}" + (f"  [{detail}]" if detail else "")
    ACCEPTANCE_RESULTS.append(line)
    print(f"[acceptance] {line}")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(line)
