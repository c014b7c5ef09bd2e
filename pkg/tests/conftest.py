from collections import defaultdict

# criterion number -> list of (part, passed, detail) filled in by test_acceptance
ACCEPTANCE: dict[int, list[tuple[str, bool, str]]] = defaultdict(list)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        parts = ACCEPTANCE[number]
        ok = all(p for _, p, _ in parts)
        terminalreporter.write_line(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}")
        for name, passed, detail in parts:
            mark = "ok  " if passed else "FAIL"
            terminalreporter.write_line(f"    {mark} {name}{': ' + detail if detail else ''}")
