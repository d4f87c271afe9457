import pytest

_criteria: list[tuple[str, str, str]] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when != "call":
        return
    for key, value in item.user_properties:
        if key == "criterion":
            status = "PASS" if rep.passed else "FAIL"
            _criteria.append((value, status, item.name))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for title, status, name in sorted(_criteria, key=lambda c: int(c[0].split()[0])):
        terminalreporter.write_line(f"{status}  criterion {title}  ({name})")
