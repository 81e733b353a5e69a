import math

import pytest
from hypothesis import HealthCheck, assume, settings
from hypothesis import strategies as st

from lorentzplane.core import Form, Vec2, quad
from lorentzplane.triangle import Triangle, classify

# The pure-triangle strategy rejects by construction, so heavy filtering is expected.
settings.register_profile(
    "default", max_examples=200, deadline=None, suppress_health_check=[HealthCheck.filter_too_much, HealthCheck.too_slow]
)
settings.load_profile("default")

L = Form.LORENTZIAN
E = Form.EUCLIDEAN

coords = st.floats(min_value=-50, max_value=50, allow_nan=False, allow_infinity=False)
vectors = st.builds(Vec2, coords, coords)
rapidities = st.floats(min_value=-5, max_value=5)


def clear_of_lightcone(v: Vec2, form: Form = L, margin: float = 0.05) -> bool:
    return abs(quad(form, v)) >= margin * (v.x**2 + v.t**2) and v.norm() > 1e-3


@st.composite
def non_null_vectors(draw, form=L):
    v = draw(vectors)
    assume(clear_of_lightcone(v, form))
    return v


@st.composite
def pure_triangles(draw, want=None):
    T = Triangle(draw(vectors), draw(vectors), draw(vectors))
    assume(not T.is_degenerate(1e-3))
    assume(all(clear_of_lightcone(e) for e in T.edges()))
    cls = classify(L, T)
    assume(cls.is_pure if want is None else cls is want)
    return T


@st.composite
def unit_pairs(draw):
    """Same-character, same-orientation unit vectors."""
    spacelike = draw(st.booleans())
    sign = draw(st.sampled_from([1, -1]))
    a, b = draw(rapidities), draw(rapidities)

    def make(r):
        if spacelike:
            return Vec2(sign * math.cosh(r), sign * math.sinh(r))
        return Vec2(sign * math.sinh(r), sign * math.cosh(r))

    return make(a), make(b)


@pytest.fixture
def T0():
    return Triangle(Vec2(0.0, 1.0), Vec2(-2.0, 0.0), Vec2(2.0, 0.0))


@pytest.fixture
def tri345():
    return Triangle(Vec2(0.0, 0.0), Vec2(4.0, 0.0), Vec2(0.0, 3.0))


# One line per acceptance criterion, echoed at the end of the run.
ACCEPTANCE: list[str] = []


def record(criterion: str, ok: bool, detail: str) -> bool:
    line = f"{'PASS' if ok else 'FAIL'} {criterion}: {detail}"
    ACCEPTANCE.append(line)
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
