"""Angle bisectors, incenters and isogonal conjugates in the Euclidean and Lorentzian planes."""

from .core import CausalCharacter, Form, Vec2
from .errors import GeometryError
from .triangle import Circle, CevianFoot, Triangle, TriangleClass

__all__ = [
    "CausalCharacter",
    "CevianFoot",
    "Circle",
    "Form",
    "GeometryError",
    "Triangle",
    "TriangleClass",
    "Vec2",
]
