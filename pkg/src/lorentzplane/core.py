"""Bilinear-form algebra on the plane, generic over the signature.

Vectors are stored as ``(x, t)``; the form is ``diag(1, epsilon)`` with
``epsilon = +1`` for the Euclidean plane and ``-1`` for the Lorentzian one.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import LightlikeMirror, NonFiniteValue, NullVector, UndefinedOrientation, ZeroVector


@dataclass(frozen=True, slots=True)
class Vec2:
    x: float
    t: float

    def __post_init__(self):
        # v - v is nonzero (nan) exactly for inf and nan; cheaper than isfinite.
        if self.x - self.x != 0.0 or self.t - self.t != 0.0:
            raise NonFiniteValue(f"non-finite component in ({self.x}, {self.t})")

    def __add__(self, other: Vec2) -> Vec2:
        return Vec2(self.x + other.x, self.t + other.t)

    def __sub__(self, other: Vec2) -> Vec2:
        return Vec2(self.x - other.x, self.t - other.t)

    def __neg__(self) -> Vec2:
        return Vec2(-self.x, -self.t)

    def __mul__(self, k: float) -> Vec2:
        return Vec2(k * self.x, k * self.t)

    __rmul__ = __mul__

    def __truediv__(self, k: float) -> Vec2:
        return Vec2(self.x / k, self.t / k)

    def __iter__(self):
        yield self.x
        yield self.t

    def norm(self) -> float:
        """Euclidean length, used for scales and tolerances only."""
        return math.hypot(self.x, self.t)


ZERO = Vec2(0.0, 0.0)


class Form(enum.IntEnum):
    EUCLIDEAN = 1
    LORENTZIAN = -1

    @property
    def epsilon(self) -> int:
        return int(self)


class CausalCharacter(enum.Enum):
    SPACELIKE = "spacelike"
    TIMELIKE = "timelike"
    LIGHTLIKE = "lightlike"


def inner(form: Form, u: Vec2, v: Vec2) -> float:
    # Form is an IntEnum, so it multiplies as its epsilon.
    return u.x * v.x + form * u.t * v.t


def quad(form: Form, v: Vec2) -> float:
    """``inner(form, v, v)``, the signed squared length."""
    return v.x * v.x + form * v.t * v.t


def cross(u: Vec2, v: Vec2) -> float:
    """Signed Euclidean area of the parallelogram spanned by ``u`` and ``v``."""
    return u.x * v.t - u.t * v.x


def causal_character(form: Form, v: Vec2, tol: float = 0.0) -> CausalCharacter:
    """Classify ``v`` by the sign of its squared length.

    With ``tol > 0`` a vector counts as lightlike when
    ``|v∘v| <= tol * |v|_E**2``; the default is an exact sign test.
    """
    if v.x == 0.0 and v.t == 0.0:
        raise ZeroVector("causal character of the zero vector is undefined")
    q = quad(form, v)
    if abs(q) <= tol * (v.x * v.x + v.t * v.t):
        return CausalCharacter.LIGHTLIKE
    return CausalCharacter.SPACELIKE if q > 0 else CausalCharacter.TIMELIKE


def magnitude(form: Form, v: Vec2) -> float:
    return math.sqrt(abs(quad(form, v)))


def unit(form: Form, v: Vec2) -> Vec2:
    m = magnitude(form, v)
    if m == 0.0:
        raise NullVector(f"{v} has zero magnitude")
    return Vec2(v.x / m, v.t / m)


def rotate(phi: float, v: Vec2) -> Vec2:
    """Hyperbolic rotation (boost) by rapidity ``phi``."""
    ch, sh = math.cosh(phi), math.sinh(phi)
    return Vec2(ch * v.x + sh * v.t, sh * v.x + ch * v.t)


def orthogonal_companion(v: Vec2) -> Vec2:
    """Lorentzian normal ``(t, x)``: orthogonal to ``v`` with opposite squared length."""
    return Vec2(v.t, v.x)


def normal(form: Form, v: Vec2) -> Vec2:
    """A vector orthogonal to ``v`` under ``form`` with ``|normal| == |v|``.

    Reduces to :func:`orthogonal_companion` in the Lorentzian plane and to the
    quarter-turn ``(-t, x)`` in the Euclidean plane.
    """
    return Vec2(-form.epsilon * v.t, v.x)


def reflect(form: Form, mirror: Vec2, v: Vec2) -> Vec2:
    """Reflect ``v`` across the line spanned by ``mirror``."""
    mm = quad(form, mirror)
    if mm == 0.0:
        raise LightlikeMirror(f"cannot reflect across lightlike or zero mirror {mirror}")
    k = 2.0 * inner(form, v, mirror) / mm
    return Vec2(k * mirror.x - v.x, k * mirror.t - v.t)


def orientation(form: Form, v: Vec2) -> int:
    """Sign of the component that hyperbolic rotations cannot flip.

    Timelike vectors report ``sign(t)``, spacelike ones ``sign(x)``.  In the
    Euclidean plane every vector is spacelike and vectors on the ``t`` axis
    fall back to ``sign(t)``.
    """
    ch = causal_character(form, v)
    if ch is CausalCharacter.LIGHTLIKE:
        raise UndefinedOrientation(f"orientation of lightlike {v} is undefined")
    if ch is CausalCharacter.TIMELIKE:
        return 1 if v.t > 0 else -1
    if v.x != 0.0:
        return 1 if v.x > 0 else -1
    return 1 if v.t > 0 else -1
