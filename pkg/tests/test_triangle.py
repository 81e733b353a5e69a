import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import E, L, pure_triangles, rapidities, vectors
from lorentzplane.core import Vec2, cross, quad, reflect, rotate
from lorentzplane.errors import Degenerate, FootAtVertex, MixedCausalCharacter, NotPure, NullEdge, ParallelCevian
from lorentzplane.triangle import (
    Triangle,
    TriangleClass,
    angle_bisector_cevian,
    bisector_theorem_residual,
    bisector_theorem_terms,
    ceva_product,
    cevian_foot,
    classify,
    foot_at,
    incenter,
    incenter_concurrency_residual,
    incenter_distances,
    incircle,
    inradius,
    intersect_lines,
    line_distance_euclidean,
    law_of_sines_ratios,
    law_of_sines_residual,
    point_line_distance,
    squared_sine,
    tangent_point,
    translate,
)

R3 = math.sqrt(3)
T0_INCENTER_T = 4 - 2 * R3
MIXED = Triangle(Vec2(0, 0), Vec2(3, 1), Vec2(1, 4))


def _swap(T):
    return T.map(lambda p: Vec2(p.t, p.x))


def _solve_incenter_oracle():
    """Intersect x = 0 with the B-bisector line B + s (2/sqrt3 + 1, 1/sqrt3), by a 2x2 solve."""
    d_a = np.array([0.0, 1.0])
    d_b = np.array([2 / R3 + 1, 1 / R3])
    A, B = np.array([0.0, 1.0]), np.array([-2.0, 0.0])
    s, _ = np.linalg.solve(np.column_stack([d_a, -d_b]), B - A)
    return A + s * d_a


# --- classification -----------------------------------------------------------


def test_classify_examples(T0):
    assert classify(L, T0) is TriangleClass.PURE_SPACELIKE
    assert classify(L, Triangle(Vec2(0, 0), Vec2(4, 1), Vec2(2, -1))) is TriangleClass.HAS_LIGHTLIKE_EDGE
    assert classify(L, MIXED) is TriangleClass.MIXED
    assert classify(E, MIXED) is TriangleClass.PURE_SPACELIKE
    assert classify(L, _swap(T0)) is TriangleClass.PURE_TIMELIKE


def test_classify_degenerate():
    with pytest.raises(Degenerate):
        classify(L, Triangle(Vec2(0, 0), Vec2(1, 2), Vec2(2, 4)))


@given(vectors, vectors, vectors)
def test_edges_close_exactly(A, B, C):
    a, b, c = Triangle(A, B, C).edges()
    assert (a + b) + c == Vec2(0.0, 0.0)


# --- squared sine and the law of sines -------------------------------------------


def test_squared_sine_examples(T0):
    u = Vec2(2.0, 0.5)
    assert squared_sine(L, u, u) == 0
    assert squared_sine(L, Vec2(2, 1), Vec2(1, 2)) == pytest.approx(1.0)
    assert squared_sine(L, T0.b, T0.c) == pytest.approx(-16 / 9, abs=1e-15)


def test_squared_sine_rejects_null():
    with pytest.raises(NullEdge):
        squared_sine(L, Vec2(1, 1), Vec2(1, 0))


def test_law_of_sines_t0(T0):
    for r in law_of_sines_ratios(L, T0):
        assert r == pytest.approx(-1 / 9, abs=1e-12)
    assert law_of_sines_residual(L, T0) <= 1e-15


def test_un_squared_variant_breaks_law_of_sines(T0):
    r = law_of_sines_ratios(L, T0, literal=True)
    # 1/36, 7/18, 7/18 by hand
    assert r == pytest.approx((1 / 36, 7 / 18, 7 / 18))
    assert law_of_sines_residual(L, T0, literal=True) >= 0.1


def test_law_of_sines_equilateral_euclidean():
    T = Triangle(Vec2(0, 0), Vec2(1, 0), Vec2(0.5, math.sqrt(3) / 2))
    assert law_of_sines_residual(E, T) <= 1e-15


def _exact_ratios(T):
    """Direct formula 1 - (u∘v)^2/((u∘u)(v∘v)) in exact rational arithmetic."""
    pts = [(Fraction(p.x), Fraction(p.t)) for p in (T.A, T.B, T.C)]
    (Ax, At), (Bx, Bt), (Cx, Ct) = pts
    a, b = (Cx - Bx, Ct - Bt), (Ax - Cx, At - Ct)
    c = (-(a[0] + b[0]), -(a[1] + b[1]))

    def ip(u, v):
        return u[0] * v[0] - u[1] * v[1]

    def s2(u, v):
        return 1 - ip(u, v) ** 2 / (ip(u, u) * ip(v, v))

    return s2(b, c) / ip(a, a), s2(c, a) / ip(b, b), s2(a, b) / ip(c, c)


@given(vectors, vectors, vectors)
def test_squared_sine_matches_exact_direct_formula(A, B, C):
    T = Triangle(A, B, C)
    assume(not T.is_degenerate(1e-6))
    assume(all(e.norm() > 1e-3 for e in T.edges()))
    assume(all(abs(quad(L, e)) > 1e-3 * e.norm() ** 2 for e in T.edges()))
    exact = _exact_ratios(T)
    assert exact[0] == exact[1] == exact[2]
    for got, want in zip(law_of_sines_ratios(L, T), exact):
        assert got == pytest.approx(float(want), rel=1e-9)


# --- cevians and Ceva ------------------------------------------------------------


def test_cevian_foot_examples(T0):
    f = cevian_foot(T0, "A", Vec2(0, -1))
    assert f.point == Vec2(0, 0) and f.param == 0.5
    with pytest.raises(ParallelCevian):
        cevian_foot(T0, "A", Vec2(1, 0))
    # The side opposite B runs from C to A, so C itself sits at param 0.
    f = cevian_foot(T0, "B", T0.C - T0.B)
    assert f.param == pytest.approx(0.0, abs=1e-15) and (f.point - T0.C).norm() <= 1e-15


def test_ceva_examples(T0):
    mids = [foot_at(T0, v, 0.5) for v in "ABC"]
    assert ceva_product(L, T0, *mids) == pytest.approx((1.0, 1.0))
    squared, signed = ceva_product(L, T0, mids[0], mids[1], foot_at(T0, "C", 0.25))
    assert signed == pytest.approx(1 / 3)
    assert squared == pytest.approx(1 / 9)
    feet = [angle_bisector_cevian(L, T0, v)[1] for v in "ABC"]
    squared, signed = ceva_product(L, T0, *feet)
    assert squared == pytest.approx(1.0, abs=1e-12) and signed == pytest.approx(1.0, abs=1e-12)


def test_ceva_foot_at_vertex(T0):
    with pytest.raises(FootAtVertex):
        ceva_product(L, T0, foot_at(T0, "A", 1.0), foot_at(T0, "B", 0.5), foot_at(T0, "C", 0.5))


@given(pure_triangles(), st.floats(-3, 3), st.floats(-3, 3), st.floats(-3, 3))
def test_ceva_through_any_point(T, wa, wb, wc):
    tot = wa + wb + wc
    assume(abs(tot) > 0.1)
    P = (wa * T.A + wb * T.B + wc * T.C) / tot
    try:
        feet = [cevian_foot(T, v, P - T.vertex(v)) for v in "ABC"]
    except ParallelCevian:
        assume(False)
    assume(all(0.01 < abs(f.param) and abs(1 - f.param) > 0.01 and abs(f.param) < 100 for f in feet))
    squared, signed = ceva_product(L, T, *feet)
    assert signed == pytest.approx(1.0, abs=1e-9)
    assert squared == pytest.approx(1.0, abs=1e-9)
    assert squared == pytest.approx(signed**2, abs=1e-9)


def test_unsigned_product_alone_does_not_imply_concurrency(T0):
    # Ratios 2, 1, 1/2 are concurrent. Moving F to the external point with ratio -1/2
    # keeps the unsigned product at 1 but the cevians no longer meet.
    D = foot_at(T0, "A", 2 / 3)
    Ef = foot_at(T0, "B", 0.5)
    F_int = foot_at(T0, "C", 1 / 3)
    F_ext = foot_at(T0, "C", -1.0)
    sq_int, sg_int = ceva_product(L, T0, D, Ef, F_int)
    sq_ext, sg_ext = ceva_product(L, T0, D, Ef, F_ext)
    assert sq_int == pytest.approx(1.0) and sg_int == pytest.approx(1.0)
    assert sq_ext == pytest.approx(1.0) and sg_ext == pytest.approx(-1.0)
    s, _ = intersect_lines(T0.A, D.point - T0.A, T0.B, Ef.point - T0.B)
    X = T0.A + s * (D.point - T0.A)
    assert line_distance_euclidean(X, T0.C, F_int.point - T0.C) <= 1e-12
    assert line_distance_euclidean(X, T0.C, F_ext.point - T0.C) > 0.1


# --- bisector cevians and the bisector theorem -------------------------------------


def test_angle_bisector_cevian_examples(T0):
    w, f = angle_bisector_cevian(L, T0, "A")
    assert abs(cross(w, Vec2(0, 1))) <= 1e-15 and f.point == Vec2(0, 0)
    w, _ = angle_bisector_cevian(L, T0, "B")
    assert abs(cross(w, Vec2(2 / R3 + 1, 1 / R3))) <= 1e-15
    with pytest.raises(MixedCausalCharacter):
        for v in "ABC":
            angle_bisector_cevian(L, MIXED, v)


def test_bisector_theorem_examples(T0):
    assert bisector_theorem_residual(L, T0, "A") <= 1e-15
    iso = Triangle(Vec2(0, 1.5), Vec2(-3, 0), Vec2(3, 0))
    assert classify(L, iso).is_pure
    assert bisector_theorem_residual(L, iso, "A") <= 1e-14


@given(pure_triangles(), st.sampled_from("ABC"))
def test_bisector_theorem_random(T, v):
    lhs, rhs = bisector_theorem_terms(L, T, v)
    assert abs(lhs - rhs) <= 1e-9 * max(1.0, abs(lhs))


@given(pure_triangles(), st.sampled_from("ABC"))
def test_bisector_foot_falls_inside_side(T, v):
    _, f = angle_bisector_cevian(L, T, v)
    assert 0.0 < f.param < 1.0


# --- incenter, distances, incircle ---------------------------------------------------


def test_incenter_t0(T0):
    oracle = _solve_incenter_oracle()
    assert oracle[0] == pytest.approx(0.0, abs=1e-15)
    assert oracle[1] == pytest.approx(T0_INCENTER_T, abs=1e-15)
    I = incenter(L, T0)
    assert abs(I.x) <= 1e-12 and abs(I.t - T0_INCENTER_T) <= 1e-12


def test_incenter_translation_and_errors(T0):
    v = Vec2(3.5, -7.25)
    I = incenter(L, translate(T0, v))
    assert (I - (incenter(L, T0) + v)).norm() <= 1e-12
    with pytest.raises(NotPure):
        incenter(L, MIXED)
    with pytest.raises(Degenerate):
        incenter(L, Triangle(Vec2(0, 0), Vec2(1, 0), Vec2(2, 0)))


def test_point_line_distance_examples(T0):
    P = Vec2(0, T0_INCENTER_T)
    assert point_line_distance(L, Vec2(1, 0), Vec2(-3, 0), Vec2(1, 0)) == 0
    assert point_line_distance(L, P, Vec2(0, 0), Vec2(1, 0)) == pytest.approx(T0_INCENTER_T, abs=1e-15)
    assert abs(6 - 4 * R3) / R3 == pytest.approx(T0_INCENTER_T)
    assert point_line_distance(L, P, T0.A, T0.B - T0.A) == pytest.approx(T0_INCENTER_T, abs=1e-15)


def test_inradius_examples(T0):
    assert inradius(L, T0) == pytest.approx(T0_INCENTER_T, abs=1e-12)
    d = incenter_distances(L, T0)
    assert max(d) - min(d) <= 1e-12
    k = 2.5
    scaled = T0.map(lambda p: k * p)
    assert inradius(L, scaled) == pytest.approx(k * T0_INCENTER_T, rel=1e-12)


def test_incircle_t0(T0):
    circ = incircle(L, T0)
    assert circ.sigma == -1
    assert circ.radius == pytest.approx(T0_INCENTER_T, abs=1e-12)
    # Side BC (t = 0) touches the lower branch at the origin.
    F = tangent_point(L, circ.center, T0.B, T0.a)
    assert F.norm() <= 1e-12


def test_incircle_timelike_mirror(T0):
    circ = incircle(L, _swap(T0))
    assert circ.sigma == 1
    assert circ.radius == pytest.approx(T0_INCENTER_T, abs=1e-12)
    assert (circ.center - Vec2(T0_INCENTER_T, 0)).norm() <= 1e-12


def test_incircle_euclidean(tri345):
    circ = incircle(E, tri345)
    assert (circ.center - Vec2(1, 1)).norm() <= 1e-12
    assert circ.radius == pytest.approx(1.0, abs=1e-12)
    assert circ.sigma == 1


@given(pure_triangles())
def test_incenter_concurrency_and_tangency(T):
    I = incenter(L, T)
    assert incenter_concurrency_residual(L, T, I) <= 1e-9 * max(T.diameter(), (I - T.A).norm())
    d = incenter_distances(L, T, I)
    assert max(d) - min(d) <= 1e-8 * max(d)
    circ = incircle(L, T)
    for Q, e in ((T.B, T.a), (T.C, T.b), (T.A, T.c)):
        F = tangent_point(L, circ.center, Q, e)
        assert quad(L, F - circ.center) == pytest.approx(circ.sigma * circ.radius**2, rel=1e-8)


@given(pure_triangles(), rapidities, vectors, st.booleans(), st.floats(-1, 1), st.booleans())
def test_incenter_isometry_equivariance(T, phi, shift, do_reflect, mirror_rap, timelike_mirror):
    phi = phi / 5
    m = Vec2(math.cosh(mirror_rap), math.sinh(mirror_rap))
    if timelike_mirror:
        m = Vec2(m.t, m.x)

    def g(p):
        q = rotate(phi, p)
        if do_reflect:
            q = reflect(L, m, q)
        return q + shift

    gT = T.map(g)
    I = g(incenter(L, T))
    assert (incenter(L, gT) - I).norm() <= 1e-9 * max(1.0, gT.diameter(), I.norm())
