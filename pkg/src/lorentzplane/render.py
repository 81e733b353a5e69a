"""SVG drawings of triangles, cevians and incircles.

World coordinates ``(x, t)`` map to pixels with ``+t`` pointing up.  Lorentzian
incircles are hyperbolas and are drawn as two sampled branches.
"""

from __future__ import annotations

import math

from .core import Form, Vec2
from .errors import GeometryError
from .isogonal import isogonal_conjugate, reflected_cevians
from .scene import Scene
from .triangle import VERTICES, Circle, angle_bisector_cevian, cevian_foot, incircle

PAD = 0.25


class Viewport:
    def __init__(self, xmin: float, tmin: float, xmax: float, tmax: float, width: int):
        self.xmin, self.tmin, self.xmax, self.tmax = xmin, tmin, xmax, tmax
        self.width = width
        self.px_per_unit = width / (xmax - xmin)
        self.height = max(2, round((tmax - tmin) * self.px_per_unit))

    def to_px(self, p: Vec2) -> tuple[float, float]:
        return (
            (p.x - self.xmin) * self.px_per_unit,
            (self.tmax - p.t) * self.px_per_unit,
        )

    def corners(self) -> list[Vec2]:
        return [Vec2(x, t) for x in (self.xmin, self.xmax) for t in (self.tmin, self.tmax)]


def default_viewport(points: list[Vec2], width: int) -> Viewport:
    xs = [p.x for p in points]
    ts = [p.t for p in points]
    span = max(max(xs) - min(xs), max(ts) - min(ts))
    pad = PAD * span
    return Viewport(min(xs) - pad, min(ts) - pad, max(xs) + pad, max(ts) + pad, width)


def scene_viewport(scene: Scene, circ: Circle | None = None) -> Viewport:
    """Explicit viewport from the scene, else the padded box around its points."""
    opts = scene.render
    if opts.viewport is not None:
        return Viewport(*opts.viewport, opts.width)
    T = scene.triangle
    focus = [T.A, T.B, T.C]
    if circ is None:
        try:
            circ = incircle(scene.form, T)
        except GeometryError:
            pass
    if circ is not None:
        focus.append(circ.center)
    if scene.point is not None:
        focus.append(scene.point)
    return default_viewport(focus, opts.width)


def _fmt(v: float) -> str:
    s = f"{v:.3f}"
    return "0.000" if s == "-0.000" else s


def _path(vp: Viewport, pts: list[Vec2]) -> str:
    coords = [vp.to_px(p) for p in pts]
    head = f"M{_fmt(coords[0][0])},{_fmt(coords[0][1])}"
    return head + "".join(f" L{_fmt(x)},{_fmt(y)}" for x, y in coords[1:])


def circle_branches(form: Form, circ: Circle, vp: Viewport, samples: int) -> list[list[Vec2]]:
    """Sampled curves of the locus ``(p - c)∘(p - c) = sigma r**2``.

    The hyperbolic parameter range ``[-S, S]`` is wide enough that both
    branches leave the viewport.
    """
    c, r = circ.center, circ.radius
    if form is Form.EUCLIDEAN:
        ts = [2.0 * math.pi * k / (samples - 1) for k in range(samples)]
        return [[Vec2(c.x + r * math.cos(s), c.t + r * math.sin(s)) for s in ts]]
    reach = max((q - c).norm() for q in vp.corners())
    S = min(50.0, math.asinh(reach / r) + 0.5)
    ss = [-S + 2.0 * S * k / (samples - 1) for k in range(samples)]
    branches = []
    for sign in (1.0, -1.0):
        if circ.sigma < 0:
            pts = [Vec2(c.x + sign * r * math.sinh(s), c.t + sign * r * math.cosh(s)) for s in ss]
        else:
            pts = [Vec2(c.x + sign * r * math.cosh(s), c.t + sign * r * math.sinh(s)) for s in ss]
        branches.append(pts)
    return branches


def render_svg(scene: Scene, samples: int | None = None) -> str:
    form, T = scene.form, scene.triangle
    opts = scene.render
    samples = samples or opts.samples
    warnings: list[str] = []

    def attempt(label, fn, *args):
        try:
            return fn(*args)
        except GeometryError as exc:
            warnings.append(f"{label}: {type(exc).__name__}: {exc}")
            return None

    verts = [T.vertex(v) for v in VERTICES]
    circ = attempt("incircle", incircle, form, T)
    vp = scene_viewport(scene, circ)

    body: list[str] = []
    body.append(f'<path class="triangle" d="{_path(vp, verts + verts[:1])} Z" fill="none" stroke="black" stroke-width="1.5"/>')
    for v, p in zip(VERTICES, verts):
        x, y = vp.to_px(p)
        body.append(f'<text x="{_fmt(x + 4)}" y="{_fmt(y - 4)}" font-size="14">{v}</text>')

    if opts.cevians in ("bisectors", "all"):
        for v in VERTICES:
            got = attempt(f"bisector {v}", angle_bisector_cevian, form, T, v)
            if got is not None:
                _, foot = got
                body.append(f'<path class="bisector" d="{_path(vp, [T.vertex(v), foot.point])}" stroke="#1f77b4" stroke-dasharray="4 3"/>')

    if circ is not None:
        for k, branch in enumerate(circle_branches(form, circ, vp, samples)):
            body.append(f'<path class="incircle" data-branch="{k}" d="{_path(vp, branch)}" fill="none" stroke="#2ca02c"/>')
        x, y = vp.to_px(circ.center)
        body.append(f'<circle class="incenter" cx="{_fmt(x)}" cy="{_fmt(y)}" r="3" fill="#2ca02c"/>')

    if scene.point is not None:
        P = scene.point
        x, y = vp.to_px(P)
        body.append(f'<circle class="point" cx="{_fmt(x)}" cy="{_fmt(y)}" r="3" fill="#d62728"/>')
        if opts.cevians == "all":
            for v in VERTICES:
                foot = attempt(f"cevian {v}", cevian_foot, T, v, P - T.vertex(v))
                if foot is not None:
                    body.append(f'<path class="cevian" d="{_path(vp, [T.vertex(v), foot.point])}" stroke="#d62728"/>')
            refl = attempt("reflected cevians", reflected_cevians, form, T, P)
            if refl is not None:
                for v in VERTICES:
                    foot = attempt(f"reflected cevian {v}", cevian_foot, T, v, refl[v])
                    if foot is not None:
                        body.append(f'<path class="reflected" d="{_path(vp, [T.vertex(v), foot.point])}" stroke="#9467bd"/>')
        conj = attempt("isogonal conjugate", isogonal_conjugate, form, T, P)
        if conj is not None:
            x, y = vp.to_px(conj)
            body.append(f'<circle class="conjugate" cx="{_fmt(x)}" cy="{_fmt(y)}" r="3" fill="#9467bd"/>')

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{vp.width}" height="{vp.height}" '
        f'viewBox="0 0 {vp.width} {vp.height}">',
    ]
    lines += [f"<!-- warning: {w.replace('--', '- -')} -->" for w in warnings]
    lines += body
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
