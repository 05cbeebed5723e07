import os
import sys

from hypothesis import HealthCheck, settings, strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from hesspat.hessenberg import HessenbergFunction  # noqa: E402
from hesspat.perm_core import Permutation  # noqa: E402

settings.register_profile("default", max_examples=150, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def perms(min_n=1, max_n=6):
    return st.integers(min_n, max_n).flatmap(lambda n: st.permutations(range(1, n + 1))).map(
        lambda xs: Permutation(tuple(xs))
    )


def perms_of(n):
    return st.permutations(range(1, n + 1)).map(lambda xs: Permutation(tuple(xs)))


@st.composite
def hess_of(draw, n):
    vals = []
    lo = 1
    for i in range(1, n + 1):
        v = draw(st.integers(max(lo, i), n))
        vals.append(v)
        lo = v
    return HessenbergFunction(tuple(vals))


@st.composite
def perm_and_hess(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    return draw(perms_of(n)), draw(hess_of(n))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.verdict_lines():
        terminalreporter.write_line(line)
