"""Exception hierarchy shared by every geometry routine."""


class GeometryError(ValueError):
    """Base class: a quantity is undefined for the given input."""


class NonFiniteValue(GeometryError):
    pass


class NullVector(GeometryError):
    """Vector has zero magnitude under the active form (lightlike or zero)."""


class ZeroVector(NullVector):
    pass


class LightlikeMirror(GeometryError):
    """Reflection across a lightlike line is not an isometry."""


class UndefinedOrientation(GeometryError):
    pass


class MixedCausalCharacter(GeometryError):
    pass


class NoRotation(GeometryError):
    """No hyperbolic rotation maps one unit vector onto the other."""


class Degenerate(GeometryError):
    pass


class NullEdge(GeometryError):
    pass


class ParallelCevian(GeometryError):
    pass


class FootAtVertex(GeometryError):
    pass


class NotPure(GeometryError):
    pass


class LightlikeLine(GeometryError):
    pass


class VertexCoincidence(GeometryError):
    pass


class LightlikeCevian(GeometryError):
    pass


class GeneratorExhausted(RuntimeError):
    pass
