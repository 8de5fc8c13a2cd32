import pytest
from hypothesis import strategies as st

from ifpsoft import make_ifps

TOL = 1e-9

U5 = ["u1", "u2", "u3", "u4", "u5"]

_acceptance_results = []


@pytest.fixture
def hiring():
    """Five candidates scored on experience, computer knowledge, training, young age."""
    return make_ifps(U5, ["x1", "x2", "x3", "x4"], {
        "x1": (0.7, 0.3, ["u1", "u2", "u4"]),
        "x2": (0.2, 0.5, U5),
        "x3": (0.5, 0.5, ["u1", "u2", "u4"]),
        "x4": (0.6, 0.3, ["u2", "u3"]),
    })


@pytest.fixture
def witness():
    return make_ifps(U5, ["x1", "x2", "x3", "x4"], {
        "x2": (0.2, 0.5, ["u2", "u4"]),
        "x3": (0.5, 0.5, []),
        "x4": (0.6, 0.3, U5),
    })


@st.composite
def degree_pairs(draw):
    alpha = draw(st.floats(0.0, 1.0))
    beta = draw(st.floats(0.0, 1.0 - alpha))
    return alpha, beta


@st.composite
def ifps_sets(draw, universe_size=None, param_count=None):
    n = universe_size or draw(st.integers(1, 6))
    m = param_count or draw(st.integers(1, 5))
    universe = [f"u{i}" for i in range(1, n + 1)]
    params = [f"x{i}" for i in range(1, m + 1)]
    entries = {}
    for x in params:
        if draw(st.booleans()):
            alpha, beta = draw(degree_pairs())
            support = draw(st.sets(st.sampled_from(universe)))
            if (alpha, beta) == (0.0, 1.0):
                support = set()
            entries[x] = (alpha, beta, support)
    return make_ifps(universe, params, entries)


@st.composite
def aligned_pairs(draw, count=2):
    n = draw(st.integers(1, 6))
    m = draw(st.integers(1, 5))
    return tuple(draw(ifps_sets(n, m)) for _ in range(count))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if item.module.__name__.endswith("test_acceptance") and rep.when == "call":
        doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
        _acceptance_results.append((rep.passed, doc))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for passed, doc in _acceptance_results:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {doc}")
