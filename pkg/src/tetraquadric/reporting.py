"""File formats, analysis reports, mesh and SVG emission, and class-targeted
random tetrahedron generators."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import altquadric, tetra
from .altquadric import AltitudeQuadric, QuadricKind
from .core import DEFAULT_TOL, Tolerance, Vec3, dot, norm
from .errors import (
    EmptyFamily,
    InternalInvariantError,
    NotHyperboloid,
    ParseError,
)
from .forms import eigendecompose, trace
from .porism import Ellipse3, InscribedTriangle, orthocenter2d
from .tetra import TetraClass, TetraKind, Tetrahedron


def parse_tetrahedron(text: str) -> Tetrahedron:
    """Read a tetrahedron from a JSON document {"vertices": [[x,y,z] x4]}."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "vertices" not in doc:
        raise ParseError('document must be an object with a "vertices" field')
    verts = doc["vertices"]
    if (
        not isinstance(verts, list)
        or len(verts) != 4
        or any(not isinstance(v, list) or len(v) != 3 for v in verts)
    ):
        raise ParseError("vertices must be four [x, y, z] triples")
    try:
        arr = np.array(verts, dtype=float)
    except (TypeError, ValueError) as exc:
        raise ParseError("vertex coordinates must be numbers") from exc
    if not np.all(np.isfinite(arr)):
        raise ParseError("vertex coordinates must be finite")
    return Tetrahedron(arr)


def serialize_tetrahedron(t: Tetrahedron) -> str:
    return json.dumps({"vertices": [list(v) for v in t.vertices]})


@dataclass(frozen=True)
class AnalysisReport:
    vertices: list
    tetra_class: str
    orthogonal_pair: Optional[list]
    monge: list
    centroid: list
    circumcenter: list
    orthocenter: Optional[list]
    euler_direction: Optional[list]
    lambdas: list
    opposite_edge_dots: list
    q_star: list
    rhs: float
    quadric_kind: str
    residuals: dict
    warnings: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "vertices": self.vertices,
            "tetra_class": self.tetra_class,
            "orthogonal_pair": self.orthogonal_pair,
            "monge": self.monge,
            "centroid": self.centroid,
            "circumcenter": self.circumcenter,
            "orthocenter": self.orthocenter,
            "euler_direction": self.euler_direction,
            "lambdas": self.lambdas,
            "opposite_edge_dots": self.opposite_edge_dots,
            "q_star": self.q_star,
            "rhs": self.rhs,
            "quadric_kind": self.quadric_kind,
            "residuals": self.residuals,
            "warnings": self.warnings,
        }


def altitude_level_residual(t: Tetrahedron, tol: Tolerance = DEFAULT_TOL) -> float:
    """Max relative deviation of altitude points from the quadric equation.

    Each altitude is sampled at seven parameters spread over a few edge
    lengths; the residual is normalized by the natural sixth-power length
    scale of the equation.
    """
    qd = altquadric.build(t, tol)
    lam = tetra.lambdas(t, tol).as_array()
    denom = max(abs(qd.rhs), float(np.max(np.abs(lam))) ** 3, tol.abs_eps)
    s = t.edge_scale()
    worst = 0.0
    for l in range(4):
        h = tetra.altitude(t, l, tol)
        for k in range(-3, 4):
            p = h.point_at(k * s)
            worst = max(worst, qd.level_residual(p) / denom)
    return worst


def analyze(t: Tetrahedron, tol: Tolerance = DEFAULT_TOL) -> AnalysisReport:
    """Aggregate every construction and its residuals into one report."""
    cls = tetra.classify(t, tol)
    points = tetra.noteworthy(t, tol)
    lam = tetra.lambdas(t, tol)
    qd = altquadric.build(t, tol)
    s = t.edge_scale()

    midplane_res = max(
        tetra.midplane(t, i, j).residual(points.monge)
        for i in range(4)
        for j in range(4)
        if i != j
    )
    circum_d = [norm(t.vertex(i) - points.circumcenter) for i in range(4)]
    two_term = altquadric.q_star_two_term(t, tol)
    residuals = {
        "pluecker": abs(tetra.pluecker_residual(t)),
        "monge_midplanes": midplane_res,
        "monge_identity": tetra.monge_identity_residual(t),
        "euler_midpoint": norm(
            points.centroid - 0.5 * (points.circumcenter + points.monge)
        ),
        "circumdistance_spread": max(circum_d) - min(circum_d),
        "q_star_trace": abs(trace(qd.form)),
        "q_star_two_term": max(
            abs(a - b)
            for a, b in zip(qd.form.coefficients, two_term.coefficients)
        ),
        "altitude_incidence": altitude_level_residual(t, tol),
    }
    warnings = []
    if cls.warning:
        warnings.append(cls.warning)
    expected = {
        TetraKind.GENERIC: QuadricKind.HYPERBOLOID,
        TetraKind.SEMI_ORTHOCENTRIC: QuadricKind.PLANE_PAIR,
        TetraKind.ORTHOCENTRIC: QuadricKind.TRIVIAL,
    }
    if qd.kind is not expected[cls.kind]:
        raise InternalInvariantError(
            f"class {cls.kind.value} inconsistent with quadric kind {qd.kind.value}"
        )
    if residuals["monge_midplanes"] > tol.gate(s) * 100:
        warnings.append("monge point residual above gate")

    return AnalysisReport(
        vertices=[list(v) for v in t.vertices],
        tetra_class=cls.kind.value,
        orthogonal_pair=(
            [list(cls.orthogonal_pair[0]), list(cls.orthogonal_pair[1])]
            if cls.orthogonal_pair
            else None
        ),
        monge=list(points.monge),
        centroid=list(points.centroid),
        circumcenter=list(points.circumcenter),
        orthocenter=list(points.orthocenter) if points.orthocenter is not None else None,
        euler_direction=list(points.euler.dir) if points.euler is not None else None,
        lambdas=list(lam.as_array()),
        opposite_edge_dots=list(tetra.opposite_edge_dots(t)),
        q_star=list(qd.form.coefficients),
        rhs=qd.rhs,
        quadric_kind=qd.kind.value,
        residuals=residuals,
        warnings=warnings,
    )


@dataclass(frozen=True, eq=False)
class Mesh:
    vertices: list
    triangles: list

    def __post_init__(self):
        n = len(self.vertices)
        for tri in self.triangles:
            if any(not 0 <= i < n for i in tri):
                raise InternalInvariantError("triangle index out of range")


def quadric_mesh(qd: AltitudeQuadric, extent: float, resolution: int) -> Mesh:
    """Parametric mesh of the one-sheet hyperboloid in its principal frame.

    `extent` bounds the coordinate along the hyperboloid axis; every emitted
    vertex satisfies the quadric equation up to roundoff.
    """
    if qd.kind is not QuadricKind.HYPERBOLOID:
        raise NotHyperboloid("meshes are generated for the hyperboloid case")
    if extent <= 0:
        raise ValueError("extent must be positive")
    if resolution < 8:
        raise ValueError("resolution must be at least 8")
    frame = eigendecompose(qd.form)
    ratios = frame.values / qd.rhs
    pos = [r for r in range(3) if ratios[r] > 0]
    neg = [r for r in range(3) if ratios[r] <= 0]
    if len(pos) != 2:
        raise InternalInvariantError("level set is not a one-sheet hyperboloid")
    a = 1.0 / math.sqrt(ratios[pos[0]])
    b = 1.0 / math.sqrt(ratios[pos[1]])
    c = 1.0 / math.sqrt(-ratios[neg[0]])
    e_a, e_b, e_c = frame.axes[pos[0]], frame.axes[pos[1]], frame.axes[neg[0]]
    u_max = math.asinh(extent / c)

    verts = []
    for jj in range(resolution + 1):
        u = -u_max + 2.0 * u_max * jj / resolution
        for ii in range(resolution):
            th = 2.0 * math.pi * ii / resolution
            p = (
                qd.center
                + a * math.cos(th) * math.cosh(u) * e_a
                + b * math.sin(th) * math.cosh(u) * e_b
                + c * math.sinh(u) * e_c
            )
            verts.append(p)
    tris = []
    for jj in range(resolution):
        for ii in range(resolution):
            i0 = jj * resolution + ii
            i1 = jj * resolution + (ii + 1) % resolution
            i2 = i0 + resolution
            i3 = i1 + resolution
            tris.append((i0, i1, i3))
            tris.append((i0, i3, i2))
    return Mesh(verts, tris)


def mesh_to_obj(mesh: Mesh) -> str:
    lines = [f"v {v[0]:.12g} {v[1]:.12g} {v[2]:.12g}" for v in mesh.vertices]
    lines += [f"f {a + 1} {b + 1} {c + 1}" for a, b, c in mesh.triangles]
    return "\n".join(lines) + "\n"


def _random_rigid_motion(rng: np.random.Generator):
    q, _ = np.linalg.qr(rng.normal(size=(3, 3)))
    if np.linalg.det(q) < 0:
        q[:, 0] = -q[:, 0]
    shift = rng.uniform(-5.0, 5.0, size=3)
    return q, shift


def _random_base_triangle(rng: np.random.Generator) -> np.ndarray:
    while True:
        pts = rng.uniform(-5.0, 5.0, size=(3, 2))
        d1, d2 = pts[1] - pts[0], pts[2] - pts[0]
        area2 = abs(d1[0] * d2[1] - d1[1] * d2[0])
        if area2 > 2.0:
            return pts


def _triangle_orthocenter2(pts: np.ndarray) -> np.ndarray:
    p3 = [np.array([p[0], p[1], 0.0]) for p in pts]
    return orthocenter2d(tuple(p3))[:2]


def random_tetra(
    kind: TetraKind | str, seed: int, tol: Tolerance = DEFAULT_TOL
) -> Tetrahedron:
    """Deterministic per-seed generator of a tetrahedron of the requested class.

    Generic tetrahedra are rejection-sampled; the other classes place the apex
    above a point of the base plane chosen so that the wanted set of
    opposite-edge dot products vanishes exactly: a point on one base altitude
    (semi-orthocentric) or the base orthocenter itself (orthocentric).
    """
    if isinstance(kind, str):
        kind = TetraKind(kind)
    rng = np.random.default_rng(seed)
    while True:
        t = _draw_tetra(kind, rng)
        if t is None:
            continue
        cls = tetra.classify(t, tol)
        if cls.kind is kind:
            return t


def _draw_tetra(kind: TetraKind, rng: np.random.Generator) -> Optional[Tetrahedron]:
    if kind is TetraKind.GENERIC:
        verts = rng.uniform(-5.0, 5.0, size=(4, 3))
        b = [verts[0] - verts[i] for i in (1, 2, 3)]
        scale = max(norm(x) for x in b)
        if abs(np.linalg.det(np.array(b))) < 1e-2 * scale**3:
            return None
        t = Tetrahedron(verts)
        dots = tetra.opposite_edge_dots(t)
        gates = [
            DEFAULT_TOL.gate(
                norm(tetra.edge_vector(t, *e1)), norm(tetra.edge_vector(t, *e2))
            )
            for e1, e2 in tetra.OPPOSITE_EDGE_PAIRS
        ]
        if all(abs(d) > 10.0 * g for d, g in zip(dots, gates)):
            return t
        return None

    base = _random_base_triangle(rng)
    ortho = _triangle_orthocenter2(base)
    if kind is TetraKind.ORTHOCENTRIC:
        foot = ortho
    else:
        # a point on exactly one base altitude, away from the orthocenter
        v = int(rng.integers(3))
        along = base[v] - ortho
        if norm(np.append(along, 0.0)) < 0.5:
            return None
        u = rng.uniform(0.2, 0.8)
        foot = ortho + u * along
    height = rng.uniform(1.0, 4.0) * (1.0 if rng.integers(2) else -1.0)
    verts = np.zeros((4, 3))
    verts[:3, :2] = base
    verts[3] = np.array([foot[0], foot[1], height])
    rot, shift = _random_rigid_motion(rng)
    verts = verts @ rot.T + shift
    try:
        return Tetrahedron(verts)
    except Exception:
        return None


def emit_svg_porism(family: list[InscribedTriangle], ellipse: Ellipse3) -> str:
    """SVG figure with the section ellipse, the triangle family, and the
    common orthocenter mark."""
    if not family:
        raise EmptyFamily("need at least one triangle")
    u = ellipse.semi_axes[0] / norm(ellipse.semi_axes[0])
    v = ellipse.semi_axes[1] / norm(ellipse.semi_axes[1])
    rx, ry = norm(ellipse.semi_axes[0]), norm(ellipse.semi_axes[1])

    def to2d(p: Vec3) -> tuple[float, float]:
        d = p - ellipse.center
        # y flipped for SVG screen coordinates
        return dot(d, u), -dot(d, v)

    pad = 1.15 * max(rx, ry)
    size = 480.0
    k = size / (2.0 * pad)

    def pix(xy: tuple[float, float]) -> str:
        return f"{size / 2 + k * xy[0]:.2f},{size / 2 + k * xy[1]:.2f}"

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size:.0f}" '
        f'height="{size:.0f}" viewBox="0 0 {size:.0f} {size:.0f}">',
        f'<ellipse cx="{size / 2:.2f}" cy="{size / 2:.2f}" rx="{k * rx:.2f}" '
        f'ry="{k * ry:.2f}" fill="none" stroke="black" stroke-width="1.5"/>',
    ]
    for tri in family:
        pts = " ".join(pix(to2d(p)) for p in tri.vertices)
        lines.append(
            f'<polygon points="{pts}" fill="none" stroke="steelblue" '
            f'stroke-width="0.8"/>'
        )
    lines.append(
        f'<circle cx="{size / 2:.2f}" cy="{size / 2:.2f}" r="3" fill="crimson"/>'
    )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
