import pytest

from ncause import kernels
from ncause.lang import corpus, load

ACCEPTANCE_RESULTS = {}


@pytest.fixture(scope="session")
def corpus_text():
    return corpus()


@pytest.fixture(scope="session")
def load_corpus(corpus_text):
    cache = {}

    def _load(name):
        if name not in cache:
            cache[name] = load(corpus_text[name])
        return cache[name]

    return _load


@pytest.fixture(params=sorted(kernels.BACKENDS))
def backend(request):
    before = kernels.backend()
    kernels.use_backend(request.param)
    yield request.param
    kernels.use_backend(before)


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call" or report.failed:
        if ACCEPTANCE_RESULTS.get(name) != "failed":
            ACCEPTANCE_RESULTS[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS, key=lambda n: (int(n.split("_")[2]), n)):
        verdict = "PASS" if ACCEPTANCE_RESULTS[name] == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}")
