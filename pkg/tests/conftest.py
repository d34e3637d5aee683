import pytest

_RESULTS = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    number = getattr(item.function, "criterion", None)
    if number is None or report.when != "call" and not (report.when == "setup" and report.failed):
        return
    doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
    detail = getattr(item.function, "detail", None)
    _RESULTS.append((number, "PASS" if report.passed else "FAIL", doc, detail))


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, status, doc, detail in sorted(_RESULTS):
        line = f"{status} [{number:2d}] {doc}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)
