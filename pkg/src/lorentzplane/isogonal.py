"""Isogonal cevians, isogonal conjugates and the Lemoine point."""

from __future__ import annotations

from .bisector import DEFAULT_TOL
from .core import CausalCharacter, Form, Vec2, causal_character, inner, quad, reflect, unit
from .errors import FootAtVertex, LightlikeCevian, VertexCoincidence
from .triangle import (
    VERTICES,
    CevianFoot,
    Triangle,
    angle_bisector_cevian,
    cevian_foot,
    intersect_lines,
    require_pure,
)


def centroid(T: Triangle) -> Vec2:
    return Vec2((T.A.x + T.B.x + T.C.x) / 3.0, (T.A.t + T.B.t + T.C.t) / 3.0)


def _is_lightlike(form: Form, d: Vec2) -> bool:
    return causal_character(form, d) is CausalCharacter.LIGHTLIKE


def bisector_at(form: Form, T: Triangle, vertex: str) -> Vec2:
    require_pure(form, T)
    w, _ = angle_bisector_cevian(form, T, vertex)
    return w


def isogonal_direction(form: Form, T: Triangle, vertex: str, d: Vec2) -> Vec2:
    """Reflect the cevian direction ``d`` across the bisector at ``vertex``."""
    w = bisector_at(form, T, vertex)
    if _is_lightlike(form, d):
        raise LightlikeCevian(f"cevian direction {d} is lightlike")
    return reflect(form, w, d)


def isogonal_defect(form: Form, T: Triangle, vertex: str, d1: Vec2, d2: Vec2) -> float:
    """``(unit(d1) - unit(d2))∘w`` for the bisector ``w`` at ``vertex``."""
    w = bisector_at(form, T, vertex)
    for d in (d1, d2):
        if _is_lightlike(form, d):
            raise LightlikeCevian(f"cevian direction {d} is lightlike")
    return inner(form, unit(form, d1) - unit(form, d2), w)


def is_isogonal(form: Form, T: Triangle, vertex: str, d1: Vec2, d2: Vec2, tol: float = DEFAULT_TOL) -> bool:
    """Whether ``d1`` and ``d2`` are mirror images across the vertex bisector.

    Reflections preserve causal character, so a lightlike direction is never
    isogonal to a non-lightlike one and the answer is ``False``.  Two
    lightlike directions cannot be normalized and raise ``LightlikeCevian``.
    """
    l1, l2 = _is_lightlike(form, d1), _is_lightlike(form, d2)
    if l1 and l2:
        raise LightlikeCevian("both cevian directions are lightlike")
    if l1 or l2:
        bisector_at(form, T, vertex)
        return False
    defect = isogonal_defect(form, T, vertex, d1, d2)
    scale = max(unit(form, d1).norm(), unit(form, d2).norm())
    return abs(defect) <= tol * max(1.0, scale)


def _side_ratio(form: Form, T: Triangle, foot: CevianFoot) -> float:
    P0, P1 = T.opposite(foot.vertex)
    far = quad(form, P1 - foot.point)
    if far == 0.0:
        raise FootAtVertex(f"foot of the {foot.vertex}-cevian sits on a vertex")
    return quad(form, foot.point - P0) / far


def lemma_product_terms(form: Form, T: Triangle, vertex: str, D: CevianFoot, E: CevianFoot) -> tuple[float, float]:
    """Both sides of the isogonal product identity at ``vertex``.

    For vertex ``A``: ``(BD∘BD)/(DC∘DC) * (BE∘BE)/(EC∘EC)`` and
    ``(c∘c)**2 / (b∘b)**2``; the other vertices follow cyclically.
    """
    V = T.vertex(vertex)
    P0, P1 = T.opposite(vertex)
    lhs = _side_ratio(form, T, D) * _side_ratio(form, T, E)
    rhs = (quad(form, P0 - V) / quad(form, P1 - V)) ** 2
    return lhs, rhs


def lemma_product_residual(form: Form, T: Triangle, vertex: str, D: CevianFoot, E: CevianFoot) -> float:
    lhs, rhs = lemma_product_terms(form, T, vertex, D, E)
    return abs(lhs - rhs)


def cevians_through(form: Form, T: Triangle, P: Vec2) -> dict[str, Vec2]:
    """Directions from each vertex to ``P``, validated for conjugation."""
    diam = T.diameter()
    dirs = {}
    for v in VERTICES:
        d = P - T.vertex(v)
        if d.norm() <= 1e-12 * diam:
            raise VertexCoincidence(f"point {P} coincides with vertex {v}")
        if _is_lightlike(form, d):
            raise LightlikeCevian(f"cevian from {v} through {P} is lightlike")
        dirs[v] = d
    return dirs


def reflected_cevians(form: Form, T: Triangle, P: Vec2) -> dict[str, Vec2]:
    require_pure(form, T)
    dirs = cevians_through(form, T, P)
    for v, d in dirs.items():
        # Raises ParallelCevian when the cevian never meets the opposite side.
        cevian_foot(T, v, d)
    return {v: isogonal_direction(form, T, v, d) for v, d in dirs.items()}


def isogonal_conjugate(form: Form, T: Triangle, P: Vec2) -> Vec2:
    """Common point of the three cevians of ``P`` reflected in the bisectors.

    Computed from the reflected cevians at ``A`` and ``B``; reflected lines that
    never meet raise ``ParallelCevian`` (the conjugate is at infinity).
    """
    refl = reflected_cevians(form, T, P)
    s, _ = intersect_lines(T.A, refl["A"], T.B, refl["B"])
    return T.A + s * refl["A"]


def lemoine_point(form: Form, T: Triangle) -> Vec2:
    return isogonal_conjugate(form, T, centroid(T))
