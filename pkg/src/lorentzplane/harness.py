"""Seeded randomized verification of the triangle, bisector and isogonal theorems.

Every trial draws from Philox generators keyed by ``(seed, index, stream)``,
so a trial's inputs never depend on which other trials ran or in what order.
Residuals are dimensionless: each one is normalized by the natural magnitude
of the quantity it compares (see the ``_check_*`` functions).
"""

from __future__ import annotations

import json
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from . import core
from .bisector import bisecting_rotation_angle, bisector_defect, bisector_direction
from .core import CausalCharacter, Form, Vec2, causal_character, orientation, quad, reflect, rotate, unit
from .errors import GeneratorExhausted, GeometryError
from .isogonal import (
    centroid,
    is_isogonal,
    isogonal_conjugate,
    isogonal_direction,
    lemma_product_terms,
    lemoine_point,
)
from .triangle import (
    VERTICES,
    Triangle,
    TriangleClass,
    angle_bisector_cevian,
    bisector_theorem_terms,
    ceva_product,
    cevian_foot,
    classify,
    foot_at,
    incenter,
    incenter_distances,
    incircle,
    intersect_lines,
    law_of_sines_ratios,
    line_distance_euclidean,
    side_lines,
    tangent_point,
)

L = Form.LORENTZIAN
E = Form.EUCLIDEAN

MAX_REJECTIONS = 10**6
MAX_FAILURE_RECORDS = 20
CHARACTERS = ("spacelike", "timelike", "both")

T0 = Triangle(Vec2(0.0, 1.0), Vec2(-2.0, 0.0), Vec2(2.0, 0.0))

# name -> default tolerance
PROPERTIES: dict[str, float] = {
    "law_of_sines_t0": 1e-12,
    "law_of_sines": 1e-9,
    "bisector_construction": 1e-9,
    "bisector_character": 0.0,
    "rotation_equivalence": 1e-9,
    "euclidean_bisector_angles": 1e-9,
    "bisector_theorem": 1e-9,
    "incenter_concurrency": 1e-9,
    "incircle_tangency": 1e-8,
    "incircle_locus": 1e-8,
    "incenter_equivariance": 1e-9,
    "ceva_interior": 1e-9,
    "ceva_exterior": 1e-9,
    "ceva_converse": 1e-9,
    "isogonal_roundtrip": 1e-9,
    "lemma_product": 1e-8,
    "conjugate_concurrency": 1e-8,
    "conjugate_involution": 1e-7,
    "conjugate_fixed_incenter": 1e-9,
    "lemoine_equivariance": 1e-8,
    "euclidean_incenter": 1e-10,
    "euclidean_conjugate": 1e-8,
}

# Stream tags are part of the key; never renumber them.
_STREAMS = {
    "pure": 1,
    "nonnull": 2,
    "pair": 3,
    "euclid_pair": 4,
    "isometry": 5,
    "ceva": 6,
    "lemma": 7,
    "conjugate": 8,
    "euclid": 9,
    "euclid_point": 10,
}


@dataclass(frozen=True)
class SuiteConfig:
    seed: int = 42
    trials: int = 1000
    character: str = "both"
    scale: float = 10.0
    tol: float | None = None
    lightcone_margin: float = 0.05
    # Reject slivers: |AB x AC| over the squared longest edge must reach this.
    shape_margin: float = 1e-3
    paper_literal_s2: bool = False
    properties: tuple[str, ...] | None = None

    def __post_init__(self):
        if not (isinstance(self.seed, int) and 0 <= self.seed < 2**64):
            raise ValueError("seed must be an unsigned 64-bit integer")
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if self.character not in CHARACTERS:
            raise ValueError(f"character must be one of {CHARACTERS}")
        if not self.scale > 0:
            raise ValueError("scale must be positive")
        if self.tol is not None and not self.tol > 0:
            raise ValueError("tol must be positive")
        if not self.lightcone_margin > 0:
            raise ValueError("lightcone_margin must be positive")
        if not 0 < self.shape_margin < 1:
            raise ValueError("shape_margin must lie in (0, 1)")
        if self.properties is not None:
            unknown = set(self.properties) - set(PROPERTIES)
            if unknown:
                raise ValueError(f"unknown properties: {sorted(unknown)}")

    def selected(self) -> list[str]:
        if self.properties is None:
            return list(PROPERTIES)
        return [p for p in PROPERTIES if p in self.properties]

    def tolerance(self, name: str) -> float:
        return PROPERTIES[name] if self.tol is None else self.tol


@dataclass
class Failure:
    index: int
    triangle: list[list[float]]
    residual: float


@dataclass
class PropertyResult:
    name: str
    tolerance: float
    trials: int = 0
    max_residual: float = 0.0
    failure_count: int = 0
    failures: list[Failure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failure_count == 0


@dataclass
class SuiteReport:
    config: SuiteConfig
    properties: list[PropertyResult]
    generator: dict[str, int]

    @property
    def passed(self) -> bool:
        return all(p.passed for p in self.properties)

    def property(self, name: str) -> PropertyResult:
        for p in self.properties:
            if p.name == name:
                return p
        raise KeyError(name)

    def to_dict(self) -> dict:
        cfg = asdict(self.config)
        if cfg["properties"] is not None:
            cfg["properties"] = list(cfg["properties"])
        return {
            "config": cfg,
            "passed": self.passed,
            "properties": [
                {
                    "name": p.name,
                    "tolerance": p.tolerance,
                    "trials": p.trials,
                    "max_residual": p.max_residual,
                    "passed": p.passed,
                    "failure_count": p.failure_count,
                    "failures": [asdict(f) for f in p.failures],
                }
                for p in self.properties
            ],
            "generator": dict(sorted(self.generator.items())),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False, allow_nan=False)

    @classmethod
    def from_dict(cls, d: dict) -> SuiteReport:
        cfg = dict(d["config"])
        if cfg["properties"] is not None:
            cfg["properties"] = tuple(cfg["properties"])
        props = [
            PropertyResult(
                name=p["name"],
                tolerance=p["tolerance"],
                trials=p["trials"],
                max_residual=p["max_residual"],
                failure_count=p["failure_count"],
                failures=[Failure(**f) for f in p["failures"]],
            )
            for p in d["properties"]
        ]
        return cls(SuiteConfig(**cfg), props, dict(d["generator"]))


# --- randomness -------------------------------------------------------------


class Stream:
    """Uniform draws from a Philox generator keyed by ``(seed, index, tag)``."""

    def __init__(self, seed: int, index: int, tag: str):
        key = (seed << 64) | ((index & (2**48 - 1)) << 16) | _STREAMS[tag]
        self._g = np.random.Generator(np.random.Philox(key=key))

    def uniform(self, lo: float = 0.0, hi: float = 1.0) -> float:
        return lo + (hi - lo) * float(self._g.random())

    def uniforms(self, n: int, lo: float, hi: float) -> list[float]:
        return (lo + (hi - lo) * self._g.random(n)).tolist()

    def point(self, half_width: float) -> Vec2:
        return Vec2(self.uniform(-half_width, half_width), self.uniform(-half_width, half_width))

    def sign(self) -> int:
        return 1 if self._g.random() < 0.5 else -1


def clears_lightcone(form: Form, v: Vec2, margin: float) -> bool:
    return abs(quad(form, v)) >= margin * (v.x * v.x + v.t * v.t)


def _acceptable(form: Form, T: Triangle, config: SuiteConfig) -> bool:
    if T.is_degenerate(config.shape_margin):
        return False
    return all(clears_lightcone(form, e, config.lightcone_margin) for e in T.edges())


def requested_class(config: SuiteConfig, index: int) -> TriangleClass:
    if config.character == "spacelike":
        return TriangleClass.PURE_SPACELIKE
    if config.character == "timelike":
        return TriangleClass.PURE_TIMELIKE
    return TriangleClass.PURE_SPACELIKE if index % 2 == 0 else TriangleClass.PURE_TIMELIKE


def _edges_clear(form: Form, xs: list[float], margin: float) -> bool:
    """Raw-float prefilter: every edge of the candidate clears the light cone."""
    for i, j in ((2, 4), (4, 0), (0, 2)):
        dx, dt = xs[j] - xs[i], xs[j + 1] - xs[i + 1]
        if abs(dx * dx + form * dt * dt) < margin * (dx * dx + dt * dt):
            return False
    return True


def _sample(stream: Stream, config: SuiteConfig, form: Form, accept) -> tuple[Triangle, int]:
    h, m = config.scale, config.lightcone_margin
    for rejected in range(MAX_REJECTIONS):
        xs = stream.uniforms(6, -h, h)
        if not _edges_clear(form, xs, m):
            continue
        T = Triangle(Vec2(xs[0], xs[1]), Vec2(xs[2], xs[3]), Vec2(xs[4], xs[5]))
        if _acceptable(form, T, config) and accept(T):
            return T, rejected
    raise GeneratorExhausted(f"no acceptable triangle after {MAX_REJECTIONS} draws")


def random_pure_triangle(config: SuiteConfig, index: int) -> Triangle:
    return _random_pure(config, index)[0]


def _random_pure(config: SuiteConfig, index: int) -> tuple[Triangle, int]:
    want = requested_class(config, index)
    return _sample(Stream(config.seed, index, "pure"), config, L, lambda T: classify(L, T) is want)


def random_nonnull_triangle(config: SuiteConfig, index: int) -> tuple[Triangle, int]:
    """Any Lorentzian triangle (pure or mixed) whose edges clear the light cone."""
    return _sample(Stream(config.seed, index, "nonnull"), config, L, lambda T: True)


def random_euclidean_triangle(config: SuiteConfig, index: int) -> tuple[Triangle, int]:
    return _sample(Stream(config.seed, index, "euclid"), config, E, lambda T: True)


def random_unit(stream: Stream, character: CausalCharacter, sign: int, rapidity: float = 3.0) -> Vec2:
    a = stream.uniform(-rapidity, rapidity)
    if character is CausalCharacter.SPACELIKE:
        return Vec2(sign * math.cosh(a), sign * math.sinh(a))
    return Vec2(sign * math.sinh(a), sign * math.cosh(a))


# --- oracles ----------------------------------------------------------------


def barycentric_incenter(T: Triangle) -> Vec2:
    la, lb, lc = (e.norm() for e in T.edges())
    s = la + lb + lc
    return (la * T.A + lb * T.B + lc * T.C) / s


def barycentric_isogonal_conjugate(T: Triangle, P: Vec2) -> Vec2:
    """Classical conjugate ``(a²/x : b²/y : c²/z)`` from areal coordinates of ``P``."""
    x = core.cross(T.B - P, T.C - P)
    y = core.cross(T.C - P, T.A - P)
    z = core.cross(T.A - P, T.B - P)
    la2, lb2, lc2 = (quad(E, e) for e in T.edges())
    wa, wb, wc = la2 / x, lb2 / y, lc2 / z
    return (wa * T.A + wb * T.B + wc * T.C) / (wa + wb + wc)


def euclidean_crosscheck(T: Triangle) -> float:
    """Distance between the bisector-intersection incenter and the barycentric one."""
    return (incenter(E, T) - barycentric_incenter(T)).norm()


def _rel(x: float, y: float) -> float:
    return abs(x - y) / max(1.0, abs(x), abs(y))


def _parallel_defect(u: Vec2, v: Vec2) -> float:
    return abs(core.cross(u, v)) / (u.norm() * v.norm())


def _scale(T: Triangle, *points: Vec2) -> float:
    g = centroid(T)
    return max([T.diameter()] + [(p - g).norm() for p in points])


# --- per-trial checks -------------------------------------------------------
# Each check returns a list of residuals (one per sub-instance) and may bump
# counters in ``stats``.  A GeometryError escaping a check is itself a failure.


class _Skip(Exception):
    """Instance rejected by conditioning; counted, not a failure."""


def _check_law_of_sines_t0(ctx):
    r = law_of_sines_ratios(L, T0, ctx.config.paper_literal_s2)
    return [max(abs(x + 1.0 / 9.0) for x in r)]


def _check_law_of_sines(ctx):
    T, rejected = random_nonnull_triangle(ctx.config, ctx.index)
    ctx.stats["nonnull_rejections"] += rejected
    ctx.triangle = T
    r = law_of_sines_ratios(L, T, ctx.config.paper_literal_s2)
    top = max(abs(x) for x in r)
    return [max(abs(r[0] - r[1]), abs(r[1] - r[2]), abs(r[0] - r[2])) / top]


def _random_pair(ctx, same_orientation: bool):
    s = Stream(ctx.config.seed, ctx.index, "pair")
    ch = CausalCharacter.SPACELIKE if s.uniform() < 0.5 else CausalCharacter.TIMELIKE
    o = s.sign()
    alpha = random_unit(s, ch, o)
    beta = random_unit(s, ch, o if same_orientation else s.sign())
    k1, k2 = s.uniform(0.1, 5.0), s.uniform(0.1, 5.0)
    return ch, o, alpha, beta, k1, k2


def _check_bisector_construction(ctx):
    _, _, alpha, beta, k1, k2 = _random_pair(ctx, same_orientation=False)
    u, v = k1 * alpha, k2 * beta
    w = bisector_direction(L, u, v)
    out = [abs(bisector_defect(L, u, v, w)) / max(1.0, w.norm() * max(alpha.norm(), beta.norm()))]
    if causal_character(L, w) is CausalCharacter.LIGHTLIKE:
        out.append(1.0)
    # Independent solution of (alpha - beta)∘w = 0: the form-normal of alpha - beta.
    diff = unit(L, u) - unit(L, v)
    if diff.norm() > 1e-6:
        out.append(_parallel_defect(w, core.normal(L, diff)))
    return out


def _check_bisector_character(ctx):
    ch, o, alpha, beta, k1, k2 = _random_pair(ctx, same_orientation=True)
    w = bisector_direction(L, k1 * alpha, k2 * beta)
    ok = causal_character(L, w) is ch and orientation(L, w) == o
    return [0.0 if ok else 1.0]


def _check_rotation_equivalence(ctx):
    _, _, alpha, beta, _, _ = _random_pair(ctx, same_orientation=True)
    phi = bisecting_rotation_angle(L, alpha, beta)
    w = bisector_direction(L, alpha, beta)
    half = rotate(phi, alpha)
    return [
        (half - w).norm() / w.norm(),
        (rotate(phi, half) - beta).norm() / beta.norm(),
        (rotate(2.0 * phi, alpha) - beta).norm() / beta.norm(),
    ]


def _check_euclidean_bisector_angles(ctx):
    s = Stream(ctx.config.seed, ctx.index, "euclid_pair")
    u, v = s.point(ctx.config.scale), s.point(ctx.config.scale)
    if u.norm() < 1e-6 * ctx.config.scale or v.norm() < 1e-6 * ctx.config.scale:
        raise _Skip("euclidean_pair_degenerate")
    w = bisector_direction(E, u, v)
    ang_u = math.atan2(abs(core.cross(u, w)), core.inner(E, u, w))
    ang_v = math.atan2(abs(core.cross(v, w)), core.inner(E, v, w))
    return [abs(ang_u - ang_v)]


def _pure(ctx) -> Triangle:
    if ctx.pure is None:
        T, rejected = _random_pure(ctx.config, ctx.index)
        ctx.stats["pure_rejections"] += rejected
        ctx.pure = T
    ctx.triangle = ctx.pure
    return ctx.pure


def _check_bisector_theorem(ctx):
    T = _pure(ctx)
    out = []
    for v in VERTICES:
        lhs, rhs = bisector_theorem_terms(L, T, v)
        out.append(_rel(lhs, rhs))
    return out


def _check_incenter_concurrency(ctx):
    T = _pure(ctx)
    I = incenter(L, T)
    wc, _ = angle_bisector_cevian(L, T, "C")
    return [line_distance_euclidean(I, T.C, wc) / _scale(T, I)]


def _check_incircle_tangency(ctx):
    T = _pure(ctx)
    d = incenter_distances(L, T)
    top = max(d)
    return [abs(d[0] - d[1]) / top, abs(d[1] - d[2]) / top, abs(d[0] - d[2]) / top]


def _check_incircle_locus(ctx):
    T = _pure(ctx)
    circ = incircle(L, T)
    target = circ.sigma * circ.radius**2
    return [
        abs(quad(L, tangent_point(L, circ.center, Q, e) - circ.center) - target) / circ.radius**2
        for Q, e in side_lines(T)
    ]


def _random_isometry(stream: Stream, scale: float):
    phi = stream.uniform(-1.0, 1.0)
    shift = stream.point(scale)
    mirror = None
    if stream.uniform() < 0.5:
        ch = CausalCharacter.SPACELIKE if stream.uniform() < 0.5 else CausalCharacter.TIMELIKE
        mirror = random_unit(stream, ch, 1, rapidity=1.0)

    def g(p: Vec2) -> Vec2:
        q = rotate(phi, p)
        if mirror is not None:
            q = reflect(L, mirror, q)
        return q + shift

    return g


def _check_incenter_equivariance(ctx):
    T = _pure(ctx)
    g = _random_isometry(Stream(ctx.config.seed, ctx.index, "isometry"), ctx.config.scale)
    gT = T.map(g)
    I = g(incenter(L, T))
    return [(incenter(L, gT) - I).norm() / _scale(gT, I)]


def _ceva_residuals(T: Triangle, P: Vec2) -> list[float]:
    D = cevian_foot(T, "A", P - T.A)
    Ef = cevian_foot(T, "B", P - T.B)
    F = cevian_foot(T, "C", P - T.C)
    for f in (D, Ef, F):
        if abs(f.param) < 1e-6 or abs(1.0 - f.param) < 1e-6:
            raise _Skip("ceva_foot_near_vertex")
    squared, signed = ceva_product(L, T, D, Ef, F)
    return [abs(signed - 1.0), abs(squared - 1.0)]


def _check_ceva_interior(ctx):
    T = _pure(ctx)
    s = Stream(ctx.config.seed, ctx.index, "ceva")
    w = [s.uniform(0.01, 1.0) for _ in range(3)]
    tot = sum(w)
    P = (w[0] * T.A + w[1] * T.B + w[2] * T.C) / tot
    return _ceva_residuals(T, P)


def _check_ceva_exterior(ctx):
    T = _pure(ctx)
    s = Stream(ctx.config.seed, ctx.index, "ceva")
    for _ in range(3):
        s.uniform()
    # One negative areal weight puts P outside the triangle.
    w = [s.uniform(0.1, 1.0), s.uniform(0.1, 1.0), -s.uniform(0.1, 3.0)]
    k = int(s.uniform(0, 3)) % 3
    w = w[k:] + w[:k]
    tot = sum(w)
    if abs(tot) < 1e-3:
        raise _Skip("ceva_point_at_infinity")
    P = (w[0] * T.A + w[1] * T.B + w[2] * T.C) / tot
    return _ceva_residuals(T, P)


def _check_ceva_converse(ctx):
    T = _pure(ctx)
    s = Stream(ctx.config.seed, ctx.index, "ceva")
    for _ in range(7):
        s.uniform()
    tD, tE = s.uniform(-1.0, 2.0), s.uniform(-1.0, 2.0)
    if min(abs(tD), abs(1 - tD), abs(tE), abs(1 - tE)) < 1e-3:
        raise _Skip("ceva_foot_near_vertex")
    k = 1.0 / ((tD / (1.0 - tD)) * (tE / (1.0 - tE)))
    if abs(1.0 + k) < 1e-3:
        raise _Skip("ceva_foot_at_infinity")
    tF = k / (1.0 + k)
    D, Ef, F = foot_at(T, "A", tD), foot_at(T, "B", tE), foot_at(T, "C", tF)
    squared, signed = ceva_product(L, T, D, Ef, F)
    try:
        sa, _ = intersect_lines(T.A, D.point - T.A, T.B, Ef.point - T.B)
    except GeometryError:
        raise _Skip("ceva_cevians_parallel")
    X = T.A + sa * (D.point - T.A)
    return [
        abs(signed - 1.0),
        abs(squared - 1.0),
        line_distance_euclidean(X, T.C, F.point - T.C) / _scale(T, X, F.point),
    ]


def _random_cevian(ctx, s: Stream, T: Triangle, vertex: str) -> Vec2:
    m = ctx.config.lightcone_margin
    for _ in range(1000):
        D = foot_at(T, vertex, s.uniform(-1.0, 2.0))
        d = D.point - T.vertex(vertex)
        if clears_lightcone(L, d, m) and min(abs(D.param), abs(1.0 - D.param)) > 1e-3:
            return d
        ctx.stats["lightlike_cevian"] += 1
    raise _Skip("cevian_exhausted")


def _check_isogonal_roundtrip(ctx):
    T = _pure(ctx)
    s = Stream(ctx.config.seed, ctx.index, "lemma")
    out = []
    for v in VERTICES:
        d = _random_cevian(ctx, s, T, v)
        d2 = isogonal_direction(L, T, v, d)
        back = isogonal_direction(L, T, v, d2)
        out.append(_parallel_defect(back, d) + (back - d).norm() / d.norm())
        out.append(0.0 if is_isogonal(L, T, v, d, d2) else 1.0)
    return out


def _check_lemma_product(ctx):
    T = _pure(ctx)
    s = Stream(ctx.config.seed, ctx.index, "lemma")
    out = []
    for v in VERTICES:
        d = _random_cevian(ctx, s, T, v)
        d2 = isogonal_direction(L, T, v, d)
        try:
            Ef = cevian_foot(T, v, d2)
        except GeometryError:
            ctx.stats["lemma_parallel_cevian"] += 1
            continue
        if min(abs(Ef.param), abs(1.0 - Ef.param)) < 1e-3:
            ctx.stats["lemma_foot_near_vertex"] += 1
            continue
        D = cevian_foot(T, v, d)
        lhs, rhs = lemma_product_terms(L, T, v, D, Ef)
        out.append(abs(lhs - rhs) / max(abs(lhs), abs(rhs)))
    return out


def _conditioned_point(ctx, T: Triangle) -> tuple[Vec2, Vec2]:
    """Draw ``P`` until both ``P`` and its conjugate are valid conjugation inputs."""
    s = Stream(ctx.config.seed, ctx.index, "conjugate")
    m = ctx.config.lightcone_margin
    g, diam = centroid(T), T.diameter()
    for _ in range(1000):
        P = g + s.point(diam)
        try:
            Pc = isogonal_conjugate(L, T, P)
            if (Pc - g).norm() > 1e3 * diam:
                ctx.stats["conjugate_far"] += 1
                continue
            isogonal_conjugate(L, T, Pc)
        except GeometryError as exc:
            ctx.stats["conjugate_" + type(exc).__name__] += 1
            continue
        if all(clears_lightcone(L, q - T.vertex(v), m) for q in (P, Pc) for v in VERTICES):
            return P, Pc
        ctx.stats["conjugate_near_lightcone"] += 1
    raise _Skip("conjugate_exhausted")


def _conjugate_instance(ctx):
    if ctx.conjugate is None:
        T = _pure(ctx)
        ctx.conjugate = _conditioned_point(ctx, T)
    ctx.triangle = ctx.pure
    return ctx.pure, ctx.conjugate


def _check_conjugate_concurrency(ctx):
    T, (P, Pc) = _conjugate_instance(ctx)
    dc = isogonal_direction(L, T, "C", P - T.C)
    return [line_distance_euclidean(Pc, T.C, dc) / _scale(T, P, Pc)]


def _check_conjugate_involution(ctx):
    T, (P, Pc) = _conjugate_instance(ctx)
    back = isogonal_conjugate(L, T, Pc)
    return [(back - P).norm() / _scale(T, P, Pc)]


def _check_conjugate_fixed_incenter(ctx):
    T = _pure(ctx)
    I = incenter(L, T)
    return [(isogonal_conjugate(L, T, I) - I).norm() / _scale(T, I)]


def _check_lemoine_equivariance(ctx):
    T = _pure(ctx)
    g = _random_isometry(Stream(ctx.config.seed, ctx.index, "isometry"), ctx.config.scale)
    K = g(lemoine_point(L, T))
    gT = T.map(g)
    return [(lemoine_point(L, gT) - K).norm() / _scale(gT, K)]


def _check_euclidean_incenter(ctx):
    T, rejected = random_euclidean_triangle(ctx.config, ctx.index)
    ctx.stats["euclidean_rejections"] += rejected
    ctx.triangle = T
    return [euclidean_crosscheck(T) / T.diameter()]


def _check_euclidean_conjugate(ctx):
    T, _ = random_euclidean_triangle(ctx.config, ctx.index)
    ctx.triangle = T
    s = Stream(ctx.config.seed, ctx.index, "euclid_point")
    g, diam = centroid(T), T.diameter()
    for _ in range(1000):
        P = g + s.point(diam)
        try:
            Pc = isogonal_conjugate(E, T, P)
        except GeometryError:
            ctx.stats["euclidean_conjugate_rejected"] += 1
            continue
        if (Pc - g).norm() > 1e3 * diam:
            ctx.stats["euclidean_conjugate_rejected"] += 1
            continue
        oracle = barycentric_isogonal_conjugate(T, P)
        return [(Pc - oracle).norm() / _scale(T, P, Pc)]
    raise _Skip("euclidean_conjugate_exhausted")


_CHECKS = {name: globals()["_check_" + name] for name in PROPERTIES}


class _Context:
    def __init__(self, config: SuiteConfig, index: int):
        self.config = config
        self.index = index
        self.stats: Counter[str] = Counter()
        self.pure = None
        self.conjugate = None
        self.triangle = None


def _trial(config: SuiteConfig, index: int) -> tuple[dict[str, tuple], dict[str, int]]:
    ctx = _Context(config, index)
    rows = {}
    for name in config.selected():
        if name == "law_of_sines_t0" and index != 0:
            continue
        ctx.triangle = T0 if name == "law_of_sines_t0" else None
        try:
            residuals = _CHECKS[name](ctx)
        except _Skip as skip:
            ctx.stats[f"skipped_{skip.args[0]}"] += 1
            continue
        except GeometryError as exc:
            ctx.stats[f"error_{name}_{type(exc).__name__}"] += 1
            residuals = [1.0]
        if not residuals:
            continue
        worst = max(residuals)
        if not math.isfinite(worst):
            ctx.stats[f"nonfinite_{name}"] += 1
            worst = 1.0
        tri = None if ctx.triangle is None else [[p.x, p.t] for p in (ctx.triangle.A, ctx.triangle.B, ctx.triangle.C)]
        rows[name] = (worst, tri)
    return rows, dict(ctx.stats)


def _trial_chunk(args):
    config, indices = args
    return [_trial(config, i) for i in indices]


def run_suite(config: SuiteConfig, workers: int = 1) -> SuiteReport:
    """Evaluate every selected property over ``config.trials`` trials.

    The report depends only on ``config``; ``workers > 1`` spreads trials over
    processes and merges them back in index order.
    """
    indices = list(range(config.trials))
    if workers <= 1:
        outputs = [_trial(config, i) for i in indices]
    else:
        chunks = [indices[k::workers] for k in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_trial_chunk, [(config, c) for c in chunks]))
        by_index = {}
        for chunk, part in zip(chunks, parts):
            by_index.update(zip(chunk, part))
        outputs = [by_index[i] for i in indices]

    results = {name: PropertyResult(name, config.tolerance(name)) for name in config.selected()}
    generator: dict[str, int] = {}
    for index, (rows, stats) in enumerate(outputs):
        for key, n in stats.items():
            generator[key] = generator.get(key, 0) + n
        for name, (residual, tri) in rows.items():
            res = results[name]
            res.trials += 1
            res.max_residual = max(res.max_residual, residual)
            if not residual <= res.tolerance:
                res.failure_count += 1
                if len(res.failures) < MAX_FAILURE_RECORDS:
                    res.failures.append(Failure(index, tri, residual))
    return SuiteReport(config, list(results.values()), generator)
