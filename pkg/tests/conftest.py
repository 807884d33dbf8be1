from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from hermite2.poly import LaurentPoly
from hermite2.rings import CoeffRing, QuadExt

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_ints = st.integers(min_value=-50, max_value=50)
fractions = st.builds(Fraction, small_ints, st.integers(min_value=1, max_value=12))
quads = st.builds(QuadExt, fractions, fractions)


def laurent(ring=CoeffRing.INT, lo=-6, hi=12, max_terms=12):
    coeff = {CoeffRing.INT: small_ints, CoeffRing.RAT: fractions, CoeffRing.QUAD: quads}[ring]
    return st.dictionaries(st.integers(lo, hi), coeff, max_size=max_terms).map(
        lambda d: LaurentPoly(d, ring)
    )


_criteria = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    marker = report.user_properties and dict(report.user_properties).get("criterion")
    if marker:
        _criteria.append((marker, report.outcome, report.duration))


@pytest.fixture(autouse=True)
def _tag_criterion(request, record_property):
    m = request.node.get_closest_marker("criterion")
    if m is not None:
        record_property("criterion", f"{m.args[0]}. {m.args[1]}")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome, dur in sorted(_criteria):
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}  ({dur:.2f}s)")
