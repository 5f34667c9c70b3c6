def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS, format_results

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in format_results():
        terminalreporter.write_line(line)
