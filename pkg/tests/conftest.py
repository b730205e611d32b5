import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from seaweed.compositions import Composition, SeaweedSpec

settings.register_profile("default", max_examples=150, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", max_examples=600, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def compositions(draw, total):
    if total == 0:
        return Composition()
    cuts = draw(st.sets(st.integers(1, total - 1), max_size=total - 1)) if total > 1 else set()
    edges = [0, *sorted(cuts), total]
    return Composition(edges[i + 1] - edges[i] for i in range(len(edges) - 1))


@st.composite
def a_specs(draw, max_n=40):
    n = draw(st.integers(1, max_n))
    return SeaweedSpec("A", n, draw(compositions(n)), draw(compositions(n)))


@st.composite
def c_specs(draw, max_n=40):
    n = draw(st.integers(1, max_n))
    sa = draw(st.integers(0, n))
    sb = draw(st.integers(0, n))
    return SeaweedSpec("C", n, draw(compositions(sa)), draw(compositions(sb)))


def any_specs(max_n=40):
    return st.one_of(a_specs(max_n), c_specs(max_n))


ACCEPTANCE: dict[str, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for key in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[key])
