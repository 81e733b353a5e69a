"""Scene files (JSON in) and analysis reports (JSON out)."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .core import Form, Vec2, causal_character, quad
from .errors import GeometryError
from .isogonal import centroid, cevians_through, isogonal_conjugate, lemoine_point, reflected_cevians
from .triangle import (
    VERTICES,
    CevianFoot,
    Triangle,
    angle_bisector_cevian,
    bisector_theorem_residual,
    ceva_product,
    cevian_foot,
    classify,
    incircle,
    law_of_sines_residual,
    require_nondegenerate,
)

SIGNATURES = {"euclidean": Form.EUCLIDEAN, "lorentzian": Form.LORENTZIAN}
CEVIAN_MODES = ("bisectors", "all", "none")


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)
        self.line = line
        self.column = column


@dataclass(frozen=True)
class RenderOptions:
    viewport: tuple[float, float, float, float] | None = None
    width: int = 800
    samples: int = 256
    cevians: str = "bisectors"


@dataclass(frozen=True)
class Scene:
    form: Form
    triangle: Triangle
    point: Vec2 | None = None
    render: RenderOptions = field(default_factory=RenderOptions)


def _vec(value, where: str) -> Vec2:
    if (
        not isinstance(value, list)
        or len(value) != 2
        or not all(isinstance(c, (int, float)) and not isinstance(c, bool) for c in value)
    ):
        raise ParseError(f"{where}: expected [x, t] with two numbers")
    try:
        return Vec2(float(value[0]), float(value[1]))
    except GeometryError as exc:
        raise ParseError(f"{where}: {exc}") from None


def parse_scene(text: str) -> Scene:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(data, dict):
        raise ParseError("scene must be a JSON object")
    sig = data.get("signature", "lorentzian")
    if sig not in SIGNATURES:
        raise ParseError(f"signature: expected one of {sorted(SIGNATURES)}, got {sig!r}")
    tri = data.get("triangle")
    if not isinstance(tri, dict) or set(tri) != set(VERTICES):
        raise ParseError("triangle: expected an object with keys A, B, C")
    T = Triangle(*(_vec(tri[v], f"triangle.{v}") for v in VERTICES))
    point = None
    if data.get("point") is not None:
        point = _vec(data["point"], "point")
    opts = data.get("render") or {}
    if not isinstance(opts, dict):
        raise ParseError("render: expected an object")
    viewport = opts.get("viewport")
    if viewport is not None:
        if (
            not isinstance(viewport, list)
            or len(viewport) != 4
            or not all(isinstance(c, (int, float)) for c in viewport)
            or not (viewport[0] < viewport[2] and viewport[1] < viewport[3])
        ):
            raise ParseError("render.viewport: expected [xmin, tmin, xmax, tmax] with min < max")
        viewport = tuple(float(c) for c in viewport)
    width = opts.get("width", 800)
    samples = opts.get("samples", 256)
    for name, value in (("width", width), ("samples", samples)):
        if not isinstance(value, int) or isinstance(value, bool) or value < 2:
            raise ParseError(f"render.{name}: expected an integer >= 2")
    cevians = opts.get("cevians", "bisectors")
    if cevians not in CEVIAN_MODES:
        raise ParseError(f"render.cevians: expected one of {CEVIAN_MODES}")
    return Scene(SIGNATURES[sig], T, point, RenderOptions(viewport, width, samples, cevians))


def load_scene(path: str) -> Scene:
    with open(path, encoding="utf-8") as fh:
        return parse_scene(fh.read())


def _xy(v: Vec2) -> list[float]:
    return [v.x, v.t]


def _foot(f: CevianFoot) -> dict:
    return {"point": _xy(f.point), "param": f.param}


class ErrorLog(list):
    def attempt(self, quantity: str, fn, *args):
        try:
            return fn(*args)
        except GeometryError as exc:
            self.append({"quantity": quantity, "error": type(exc).__name__, "message": str(exc)})
            return None


def conjugate_fragment(form: Form, T: Triangle, P: Vec2, errors: ErrorLog) -> dict:
    """Cevian feet of ``P``, their isogonal images, and the conjugate ``P'``."""
    out: dict = {"point": _xy(P)}
    dirs = errors.attempt("cevians", cevians_through, form, T, P)
    feet, reflected = {}, {}
    if dirs is not None:
        for v, name in zip(VERTICES, "DEF"):
            f = errors.attempt(f"foot_{name}", cevian_foot, T, v, dirs[v])
            if f is not None:
                feet[name] = _foot(f)
        refl = errors.attempt("reflected_cevians", reflected_cevians, form, T, P)
        if refl is not None:
            for v, name in zip(VERTICES, "DEF"):
                f = errors.attempt(f"foot_{name}'", cevian_foot, T, v, refl[v])
                if f is not None:
                    reflected[name + "'"] = _foot(f)
    out["cevian_feet"] = feet
    out["reflected_feet"] = reflected
    conj = errors.attempt("isogonal_conjugate", isogonal_conjugate, form, T, P)
    if conj is not None:
        out["conjugate"] = _xy(conj)
    return out


def analyze(scene: Scene, tolerance: float = 1e-9) -> dict:
    """Classification, centers and theorem residuals for a scene.

    Raises ``Degenerate`` for collinear vertices; every other undefined
    quantity is recorded in ``errors`` and omitted from the report.
    """
    form, T = scene.form, scene.triangle
    require_nondegenerate(T)
    errors = ErrorLog()
    cls = classify(form, T)
    report: dict = {
        "signature": "lorentzian" if form is Form.LORENTZIAN else "euclidean",
        "triangle": {v: _xy(T.vertex(v)) for v in VERTICES},
        "classification": cls.value,
        "edges": {
            name: {
                "vector": _xy(e),
                "squared_length": quad(form, e),
                "character": causal_character(form, e).value,
            }
            for name, e in zip("abc", T.edges())
        },
    }
    bisectors, feet = {}, {}
    for v in VERTICES:
        got = errors.attempt(f"bisector_{v}", angle_bisector_cevian, form, T, v)
        if got is not None:
            w, f = got
            bisectors[v] = {"direction": _xy(w), "foot": _foot(f)}
            feet[v] = f
    report["bisectors"] = bisectors
    circ = errors.attempt("incenter", incircle, form, T)
    if circ is not None:
        report["incenter"] = _xy(circ.center)
        report["inradius"] = circ.radius
        report["incircle"] = {"center": _xy(circ.center), "radius": circ.radius, "sigma": circ.sigma}
    report["centroid"] = _xy(centroid(T))
    lem = errors.attempt("lemoine_point", lemoine_point, form, T)
    if lem is not None:
        report["lemoine_point"] = _xy(lem)
    if scene.point is not None:
        report["isogonal_conjugate"] = conjugate_fragment(form, T, scene.point, errors)

    residuals: dict = {}
    los = errors.attempt("law_of_sines", law_of_sines_residual, form, T)
    if los is not None:
        residuals["law_of_sines"] = los
    if len(feet) == 3:
        ceva = errors.attempt("ceva_bisectors", ceva_product, form, T, feet["A"], feet["B"], feet["C"])
        if ceva is not None:
            residuals["ceva_bisectors"] = {"squared": ceva[0], "signed": ceva[1]}
    if feet:
        residuals["bisector_theorem"] = {v: bisector_theorem_residual(form, T, v) for v in feet}
    report["residuals"] = residuals
    report["checks"] = _checks(residuals, tolerance)
    report["errors"] = list(errors)
    return report


def _checks(residuals: dict, tol: float) -> dict:
    checks = {}
    if "law_of_sines" in residuals:
        checks["law_of_sines"] = residuals["law_of_sines"] <= tol
    if "ceva_bisectors" in residuals:
        c = residuals["ceva_bisectors"]
        checks["ceva_bisectors"] = abs(c["squared"] - 1) <= tol and abs(c["signed"] - 1) <= tol
    if "bisector_theorem" in residuals:
        checks["bisector_theorem"] = all(r <= tol for r in residuals["bisector_theorem"].values())
    return checks


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, allow_nan=False) + "\n"
