import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from actshell.corpus import full_corpus, graphic_family, uniform_family  # noqa: E402
from actshell.reference import reference_matroid  # noqa: E402


@pytest.fixture(scope="session")
def m0():
    return reference_matroid()


@pytest.fixture(scope="session")
def corpus():
    return full_corpus(seed=0)


@pytest.fixture(scope="session")
def small_corpus():
    """Everything with n <= 6: fast enough for the brute-force oracles."""
    return [(name, M) for name, M in full_corpus(seed=0) if M.size <= 6]


def pytest_generate_tests(metafunc):
    if "small_matroid" in metafunc.fixturenames:
        items = [("M0", reference_matroid())] + uniform_family(5) + graphic_family(4, 5)
        metafunc.parametrize("small_matroid", [M for _, M in items], ids=[n for n, _ in items])


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(mod.LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
