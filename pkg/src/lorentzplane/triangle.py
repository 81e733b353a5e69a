"""Triangles under a bilinear form: purity, law of sines, Ceva, incenter.

Edges follow the vertex-opposite convention ``a = C - B``, ``b = A - C``,
``c = B - A``.  Cevian feet are stored with an affine parameter on the
opposite side taken in cyclic order (``BC`` for ``A``, ``CA`` for ``B``,
``AB`` for ``C``), so ``param / (1 - param)`` is the directed Ceva ratio.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .bisector import bisector_direction
from .core import (
    CausalCharacter,
    Form,
    Vec2,
    causal_character,
    cross,
    inner,
    magnitude,
    normal,
    quad,
)
from .errors import (
    Degenerate,
    FootAtVertex,
    LightlikeLine,
    NotPure,
    NullEdge,
    ParallelCevian,
)

VERTICES = ("A", "B", "C")
COLLINEARITY_TOL = 1e-12
PARALLEL_TOL = 1e-12


@dataclass(frozen=True, slots=True)
class Triangle:
    A: Vec2
    B: Vec2
    C: Vec2

    @property
    def a(self) -> Vec2:
        return self.C - self.B

    @property
    def b(self) -> Vec2:
        return self.A - self.C

    @property
    def c(self) -> Vec2:
        # Closing the loop from a and b makes a + b + c == 0 hold in floating point.
        return -(self.a + self.b)

    def edges(self) -> tuple[Vec2, Vec2, Vec2]:
        a, b = self.a, self.b
        return a, b, -(a + b)

    def vertex(self, label: str) -> Vec2:
        return getattr(self, label)

    def opposite(self, label: str) -> tuple[Vec2, Vec2]:
        """Endpoints ``(P0, P1)`` of the side opposite ``label``, in cyclic order."""
        if label == "A":
            return self.B, self.C
        if label == "B":
            return self.C, self.A
        if label == "C":
            return self.A, self.B
        raise KeyError(label)

    def diameter(self) -> float:
        return max(e.norm() for e in self.edges())

    def collinearity(self) -> float:
        """``|AB x AC|`` over the squared longest edge: zero for collinear vertices, small for slivers."""
        ab, ac = self.B - self.A, self.C - self.A
        longest = max(ab.norm(), ac.norm(), (self.C - self.B).norm())
        if longest == 0.0:
            return 0.0
        return abs(cross(ab, ac)) / longest / longest

    def is_degenerate(self, tol: float = COLLINEARITY_TOL) -> bool:
        return self.collinearity() < tol

    def map(self, g) -> Triangle:
        return Triangle(g(self.A), g(self.B), g(self.C))


class TriangleClass(enum.Enum):
    PURE_SPACELIKE = "PureSpacelike"
    PURE_TIMELIKE = "PureTimelike"
    MIXED = "Mixed"
    HAS_LIGHTLIKE_EDGE = "HasLightlikeEdge"

    @property
    def is_pure(self) -> bool:
        return self in (TriangleClass.PURE_SPACELIKE, TriangleClass.PURE_TIMELIKE)


@dataclass(frozen=True, slots=True)
class CevianFoot:
    vertex: str
    point: Vec2
    param: float


@dataclass(frozen=True, slots=True)
class Circle:
    """The locus ``(p - center)∘(p - center) = sigma * radius**2``."""

    center: Vec2
    radius: float
    sigma: int


def require_nondegenerate(T: Triangle) -> None:
    if T.is_degenerate():
        raise Degenerate(f"vertices of {T} are collinear")


def classify(form: Form, T: Triangle, tol: float = 0.0) -> TriangleClass:
    require_nondegenerate(T)
    chars = {causal_character(form, e, tol) for e in T.edges()}
    if CausalCharacter.LIGHTLIKE in chars:
        return TriangleClass.HAS_LIGHTLIKE_EDGE
    if chars == {CausalCharacter.SPACELIKE}:
        return TriangleClass.PURE_SPACELIKE
    if chars == {CausalCharacter.TIMELIKE}:
        return TriangleClass.PURE_TIMELIKE
    return TriangleClass.MIXED


def require_pure(form: Form, T: Triangle) -> TriangleClass:
    cls = classify(form, T)
    if not cls.is_pure:
        raise NotPure(f"triangle is {cls.value}")
    return cls


def _require_non_null(form: Form, v: Vec2) -> float:
    q = quad(form, v)
    if q == 0.0:
        raise NullEdge(f"{v} is lightlike")
    return q


def squared_sine(form: Form, u: Vec2, v: Vec2, literal: bool = False) -> float:
    """``1 - (u∘v)**2 / ((u∘u)(v∘v))``, negative for some Lorentzian pairs.

    The numerator ``(u∘u)(v∘v) - (u∘v)**2`` equals ``epsilon * (u x v)**2``
    identically; that form is used to avoid cancellation for near-parallel
    pairs.  ``literal=True`` evaluates the un-squared variant
    ``1 - (u∘v) / ((u∘u)(v∘v))`` for comparison.
    """
    qu, qv = _require_non_null(form, u), _require_non_null(form, v)
    if literal:
        return 1.0 - inner(form, u, v) / (qu * qv)
    k = cross(u, v)
    return form.epsilon * k * k / (qu * qv)


def law_of_sines_ratios(form: Form, T: Triangle, literal: bool = False) -> tuple[float, float, float]:
    a, b, c = T.edges()
    return (
        squared_sine(form, b, c, literal) / quad(form, a),
        squared_sine(form, c, a, literal) / quad(form, b),
        squared_sine(form, a, b, literal) / quad(form, c),
    )


def law_of_sines_residual(form: Form, T: Triangle, literal: bool = False) -> float:
    r = law_of_sines_ratios(form, T, literal)
    return max(abs(r[0] - r[1]), abs(r[1] - r[2]), abs(r[0] - r[2]))


def intersect_lines(p: Vec2, d: Vec2, q: Vec2, e: Vec2) -> tuple[float, float]:
    """Solve ``p + s d = q + u e`` for ``(s, u)``."""
    det = cross(d, e)
    if abs(det) <= PARALLEL_TOL * d.norm() * e.norm():
        raise ParallelCevian(f"direction {d} is parallel to {e}")
    r = q - p
    return cross(r, e) / det, cross(r, d) / det


def cevian_foot(T: Triangle, vertex: str, direction: Vec2) -> CevianFoot:
    V = T.vertex(vertex)
    P0, P1 = T.opposite(vertex)
    _, u = intersect_lines(V, direction, P0, P1 - P0)
    return CevianFoot(vertex, P0 + u * (P1 - P0), u)


def foot_at(T: Triangle, vertex: str, param: float) -> CevianFoot:
    P0, P1 = T.opposite(vertex)
    return CevianFoot(vertex, P0 + param * (P1 - P0), param)


def ceva_product(form: Form, T: Triangle, D: CevianFoot, E: CevianFoot, F: CevianFoot) -> tuple[float, float]:
    """Return ``(squared, signed)`` Ceva products for feet on BC, CA, AB.

    ``squared`` multiplies ratios of Lorentzian squared lengths such as
    ``(BD∘BD)/(DC∘DC)``; ``signed`` multiplies directed ratios
    ``param / (1 - param)`` and equals 1 exactly for concurrent cevians.
    """
    for foot, label in ((D, "A"), (E, "B"), (F, "C")):
        if foot.vertex != label:
            raise ValueError(f"foot for vertex {label} expected, got {foot.vertex}")
    for e in T.edges():
        _require_non_null(form, e)
    squared = 1.0
    signed = 1.0
    for foot in (D, E, F):
        P0, P1 = T.opposite(foot.vertex)
        far = quad(form, P1 - foot.point)
        if far == 0.0 or foot.param == 1.0:
            raise FootAtVertex(f"foot of the {foot.vertex}-cevian sits on a vertex")
        squared *= quad(form, foot.point - P0) / far
        signed *= foot.param / (1.0 - foot.param)
    return squared, signed


def vertex_rays(T: Triangle, vertex: str) -> tuple[Vec2, Vec2]:
    V = T.vertex(vertex)
    P0, P1 = T.opposite(vertex)
    return P0 - V, P1 - V


def angle_bisector_cevian(form: Form, T: Triangle, vertex: str) -> tuple[Vec2, CevianFoot]:
    r0, r1 = vertex_rays(T, vertex)
    w = bisector_direction(form, r0, r1)
    return w, cevian_foot(T, vertex, w)


def bisector_theorem_terms(form: Form, T: Triangle, vertex: str) -> tuple[float, float]:
    """Both sides of the bisector theorem at ``vertex``.

    For vertex ``A`` these are ``(b∘b)/(c∘c)`` and ``(DC∘DC)/(BD∘BD)``.
    """
    _, D = angle_bisector_cevian(form, T, vertex)
    V = T.vertex(vertex)
    P0, P1 = T.opposite(vertex)
    lhs = quad(form, P1 - V) / quad(form, P0 - V)
    rhs = quad(form, P1 - D.point) / quad(form, D.point - P0)
    return lhs, rhs


def bisector_theorem_residual(form: Form, T: Triangle, vertex: str) -> float:
    lhs, rhs = bisector_theorem_terms(form, T, vertex)
    return abs(lhs - rhs)


def incenter(form: Form, T: Triangle) -> Vec2:
    require_pure(form, T)
    wa, _ = angle_bisector_cevian(form, T, "A")
    wb, _ = angle_bisector_cevian(form, T, "B")
    s, _ = intersect_lines(T.A, wa, T.B, wb)
    return T.A + s * wa


def line_distance_euclidean(P: Vec2, Q: Vec2, direction: Vec2) -> float:
    """Euclidean distance from ``P`` to the line ``Q + s direction``."""
    return abs(cross(P - Q, direction)) / direction.norm()


def incenter_concurrency_residual(form: Form, T: Triangle, center: Vec2 | None = None) -> float:
    """Euclidean distance from the incenter to the third (vertex ``C``) bisector line."""
    if center is None:
        center = incenter(form, T)
    wc, _ = angle_bisector_cevian(form, T, "C")
    return line_distance_euclidean(center, T.C, wc)


def point_line_distance(form: Form, P: Vec2, Q: Vec2, direction: Vec2) -> float:
    n = normal(form, direction)
    m = magnitude(form, n)
    if m == 0.0:
        raise LightlikeLine(f"line direction {direction} is lightlike")
    return abs(inner(form, P - Q, n)) / m


def side_lines(T: Triangle) -> tuple[tuple[Vec2, Vec2], ...]:
    """``(point, direction)`` for the side lines BC, CA, AB."""
    a, b, c = T.edges()
    return (T.B, a), (T.C, b), (T.A, c)


def incenter_distances(form: Form, T: Triangle, center: Vec2 | None = None) -> tuple[float, float, float]:
    if center is None:
        center = incenter(form, T)
    d = [point_line_distance(form, center, Q, e) for Q, e in side_lines(T)]
    return d[0], d[1], d[2]


def inradius(form: Form, T: Triangle) -> float:
    d = incenter_distances(form, T)
    return sum(d) / 3.0


def tangent_point(form: Form, center: Vec2, Q: Vec2, direction: Vec2) -> Vec2:
    """Foot of the form-orthogonal projection of ``center`` onto a line."""
    n = normal(form, direction)
    nn = quad(form, n)
    if nn == 0.0:
        raise LightlikeLine(f"line direction {direction} is lightlike")
    return center - (inner(form, center - Q, n) / nn) * n


def incircle(form: Form, T: Triangle) -> Circle:
    require_pure(form, T)
    center = incenter(form, T)
    r = sum(incenter_distances(form, T, center)) / 3.0
    # The radius vector to a tangency point is normal to the side, so its
    # character (and the circle's sigma) is that of the side normal.
    sigma = 1 if quad(form, normal(form, T.a)) > 0 else -1
    return Circle(center, r, sigma)


def translate(T: Triangle, v: Vec2) -> Triangle:
    return Triangle(T.A + v, T.B + v, T.C + v)

