def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import CRITERIA, RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key, _, _ in CRITERIA:
        if key in RESULTS:
            passed, line = RESULTS[key]
            terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'} [{key}] {line}")
