import pytest

from returnwords import factors, words

BUILTINS = tuple(words.BUILTIN_RULES)

# one line per acceptance criterion, printed at the end of the run
ACCEPTANCE: dict[int, str] = {}


@pytest.fixture(autouse=True, scope="session")
def _debug_checks():
    factors.DEBUG_CHECKS = True
    yield
    factors.DEBUG_CHECKS = False


@pytest.fixture(scope="session")
def sources():
    return {name: words.builtin(name) for name in BUILTINS}


@pytest.fixture(scope="session")
def tables(sources):
    return {name: factors.build_factor_table(src, 22) for name, src in sources.items()}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[k])
