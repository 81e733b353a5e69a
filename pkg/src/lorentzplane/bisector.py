"""Angle bisectors defined by equal normalized inner products."""

from __future__ import annotations

import math

from .core import (
    CausalCharacter,
    Form,
    Vec2,
    causal_character,
    inner,
    magnitude,
    normal,
    orientation,
    quad,
    unit,
)
from .errors import MixedCausalCharacter, NoRotation, NullVector

DEFAULT_TOL = 1e-9


def _non_null_character(form: Form, v: Vec2) -> CausalCharacter:
    ch = causal_character(form, v)
    if ch is CausalCharacter.LIGHTLIKE:
        raise NullVector(f"{v} is lightlike")
    return ch


def bisector_defect(form: Form, u: Vec2, v: Vec2, w: Vec2) -> float:
    """Signed difference of the two normalized inner products with ``w``."""
    _non_null_character(form, u)
    _non_null_character(form, v)
    return inner(form, u, w) / magnitude(form, u) - inner(form, v, w) / magnitude(form, v)


def is_bisector(form: Form, u: Vec2, v: Vec2, w: Vec2, tol: float = DEFAULT_TOL) -> bool:
    defect = bisector_defect(form, u, v, w)
    # Both terms are bounded by |unit|_E * |w|_E, which sets the rounding scale.
    scale = w.norm() * max(unit(form, u).norm(), unit(form, v).norm())
    return abs(defect) <= tol * max(1.0, scale)


def bisector_direction(form: Form, u: Vec2, v: Vec2) -> Vec2:
    """Unit bisector of two same-character vectors.

    Returns ``unit(unit(u) + unit(v))``.  When the two units cancel the sum is
    zero, and the normal to ``u`` is returned instead; it still satisfies the
    bisector equation with both sides zero but carries no orientation
    guarantee.
    """
    cu = _non_null_character(form, u)
    cv = _non_null_character(form, v)
    if cu is not cv:
        raise MixedCausalCharacter(f"{u} is {cu.value} but {v} is {cv.value}")
    alpha, beta = unit(form, u), unit(form, v)
    s = alpha + beta
    if s.norm() <= 1e-12 * (alpha.norm() + beta.norm()):
        return unit(form, normal(form, alpha))
    return unit(form, s)


def bisecting_rotation_angle(form: Form, alpha: Vec2, beta: Vec2) -> float:
    """Rapidity ``phi`` with ``A[phi] alpha = w`` and ``A[phi] w = beta``.

    Inputs are normalized first.  Writing ``beta = A[2 phi] alpha`` gives a
    2x2 system in ``(cosh 2phi, sinh 2phi)`` whose determinant is
    ``alpha∘alpha = ±1``.
    """
    if form is not Form.LORENTZIAN:
        raise NoRotation("hyperbolic rotations exist only in the Lorentzian plane")
    if _non_null_character(form, alpha) is not _non_null_character(form, beta):
        raise NoRotation("unit vectors of different causal character")
    if orientation(form, alpha) != orientation(form, beta):
        raise NoRotation("unit vectors of opposite orientation")
    a, b = unit(form, alpha), unit(form, beta)
    det = quad(form, a)
    ch2 = (a.x * b.x - a.t * b.t) / det
    sh2 = (a.x * b.t - a.t * b.x) / det
    if ch2 <= 0.0:
        raise NoRotation("no rotation maps alpha onto beta")
    return 0.5 * math.asinh(sh2)
