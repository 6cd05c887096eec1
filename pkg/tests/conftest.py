from __future__ import annotations

from fractions import Fraction

from hypothesis import HealthCheck, settings, strategies as st

from exjordan.exactfield import Scalar
from exjordan.octonion import Octonion

settings.register_profile("exact", derandomize=True, deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("exact")

small = st.integers(min_value=-4, max_value=4)


@st.composite
def scalars(draw, nonzero: bool = False):
    num = draw(st.lists(small, min_size=8, max_size=8))
    den = draw(st.integers(min_value=1, max_value=3))
    s = Scalar.from_ints(num, den)
    if nonzero and not s:
        s = Scalar.of(Fraction(1, den))
    return s


@st.composite
def octonions(draw):
    return Octonion.of(draw(st.lists(small, min_size=8, max_size=8)))


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is not None and getattr(mod, "RESULTS", None):
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
