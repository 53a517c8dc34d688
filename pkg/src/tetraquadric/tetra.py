"""The tetrahedron model.

Edge vectors, altitudes and orthocentric perpendiculars, midplanes, the Monge
point, centroid, circumcenter, Euler line, and the generic /
semi-orthocentric / orthocentric classification.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import numpy as np

from .core import (
    DEFAULT_TOL,
    Line3,
    Plane3,
    Tolerance,
    Vec3,
    cross,
    dot,
    line_from_two_planes,
    norm,
    solve3,
    triple,
)
from .errors import BadIndex, DegenerateTetrahedron

#: The three ways of splitting {0,1,2,3} into two opposite edges.
OPPOSITE_EDGE_PAIRS: tuple[tuple[tuple[int, int], tuple[int, int]], ...] = (
    ((0, 1), (2, 3)),
    ((0, 2), (3, 1)),
    ((0, 3), (1, 2)),
)


@dataclass(frozen=True, eq=False)
class Tetrahedron:
    """Four position vectors; rejects coplanar vertex sets at construction."""

    vertices: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.vertices, dtype=float)
        if v.shape != (4, 3) or not np.all(np.isfinite(v)):
            raise DegenerateTetrahedron("need four finite 3-vectors")
        object.__setattr__(self, "vertices", v)
        s = self.edge_scale()
        if abs(triple(*(v[0] - v[i] for i in (1, 2, 3)))) <= DEFAULT_TOL.gate(s, s, s):
            raise DegenerateTetrahedron("vertices are coplanar")

    def vertex(self, i: int) -> Vec3:
        return self.vertices[i]

    def edge_scale(self) -> float:
        return max(
            norm(self.vertices[i] - self.vertices[j])
            for i in range(4)
            for j in range(i + 1, 4)
        )

    def others(self, l: int) -> tuple[int, int, int]:
        return tuple(i for i in range(4) if i != l)


def _check_edge(i: int, j: int) -> None:
    if not (0 <= i <= 3 and 0 <= j <= 3) or i == j:
        raise BadIndex(f"({i}, {j}) is not an edge of a tetrahedron")


def edge_vector(t: Tetrahedron, i: int, j: int) -> Vec3:
    """Edge vector from vertex j to vertex i; antisymmetric in (i, j)."""
    _check_edge(i, j)
    return t.vertex(i) - t.vertex(j)


def pluecker_residual(t: Tetrahedron) -> float:
    """b01.b23 + b02.b31 + b03.b12; vanishes identically for every tetrahedron."""
    return sum(
        dot(edge_vector(t, *e1), edge_vector(t, *e2)) for e1, e2 in OPPOSITE_EDGE_PAIRS
    )


def _best_conditioned_pair(normals: list[Vec3]) -> tuple[int, int]:
    """Among three dependent plane normals, pick the pair with the largest cross."""
    best, best_mag = (0, 1), -1.0
    for a in range(3):
        for b in range(a + 1, 3):
            mag = norm(cross(normals[a] / norm(normals[a]), normals[b] / norm(normals[b])))
            if mag > best_mag:
                best, best_mag = (a, b), mag
    return best


def altitude(t: Tetrahedron, l: int, tol: Tolerance = DEFAULT_TOL) -> Line3:
    """Altitude through vertex l, orthogonal to the opposite face."""
    if not 0 <= l <= 3:
        raise BadIndex(f"vertex index {l} out of range")
    i, j, k = t.others(l)
    normals = [edge_vector(t, i, j), edge_vector(t, j, k), edge_vector(t, k, i)]
    a, b = _best_conditioned_pair(normals)
    planes = [Plane3.from_point_normal(t.vertex(l), n) for n in normals]
    line = line_from_two_planes(planes[a], planes[b], tol)
    return Line3(t.vertex(l), line.dir)


def ortho_perpendicular(t: Tetrahedron, l: int, tol: Tolerance = DEFAULT_TOL) -> Line3:
    """Line through the orthocenter of the face opposite l, orthogonal to that face.

    Parallel to the altitude through l, but in general a different line.
    """
    if not 0 <= l <= 3:
        raise BadIndex(f"vertex index {l} out of range")
    i, j, k = t.others(l)
    normals = [edge_vector(t, i, j), edge_vector(t, j, k), edge_vector(t, k, i)]
    through = [t.vertex(k), t.vertex(i), t.vertex(j)]
    a, b = _best_conditioned_pair(normals)
    planes = [Plane3.from_point_normal(p, n) for p, n in zip(through, normals)]
    return line_from_two_planes(planes[a], planes[b], tol)


def midplane(t: Tetrahedron, i: int, j: int) -> Plane3:
    """Plane orthogonal to edge ij through the midpoint of the opposite edge."""
    _check_edge(i, j)
    k, l = (x for x in range(4) if x not in (i, j))
    mid = 0.5 * (t.vertex(k) + t.vertex(l))
    return Plane3.from_point_normal(mid, edge_vector(t, i, j))


def perp_bisector(t: Tetrahedron, i: int, j: int) -> Plane3:
    """Perpendicular bisector plane of the edge ij."""
    _check_edge(i, j)
    mid = 0.5 * (t.vertex(i) + t.vertex(j))
    return Plane3.from_point_normal(mid, edge_vector(t, i, j))


def monge_point(t: Tetrahedron, tol: Tolerance = DEFAULT_TOL) -> Vec3:
    """Common point of the six midplanes."""
    return solve3(midplane(t, 0, 1), midplane(t, 0, 2), midplane(t, 0, 3), tol)


def monge_identity_residual(t: Tetrahedron) -> float:
    """Max deviation of (a_i-m).(a_l-m) = (a_j-m).(a_k-m) over the index splits."""
    m = monge_point(t)
    res = 0.0
    for (i, j), (k, l) in OPPOSITE_EDGE_PAIRS:
        lhs = dot(t.vertex(i) - m, t.vertex(j) - m)
        rhs = dot(t.vertex(k) - m, t.vertex(l) - m)
        res = max(res, abs(lhs - rhs))
    return res


def centroid(t: Tetrahedron) -> Vec3:
    return t.vertices.mean(axis=0)


def circumcenter(t: Tetrahedron, tol: Tolerance = DEFAULT_TOL) -> Vec3:
    """Point equidistant from all four vertices."""
    return solve3(
        perp_bisector(t, 0, 1), perp_bisector(t, 0, 2), perp_bisector(t, 0, 3), tol
    )


@dataclass(frozen=True)
class LambdaTriple:
    """Monge-centered pairwise vertex dot products lambda_0j."""

    l01: float
    l02: float
    l03: float

    def as_array(self) -> np.ndarray:
        return np.array([self.l01, self.l02, self.l03])


def lambdas(t: Tetrahedron, tol: Tolerance = DEFAULT_TOL) -> LambdaTriple:
    """The three scalars (a_0-m).(a_j-m) with m the Monge point.

    By the Monge identity these cover all six pairwise products.
    """
    m = monge_point(t, tol)
    a0 = t.vertex(0) - m
    return LambdaTriple(*(dot(a0, t.vertex(j) - m) for j in (1, 2, 3)))


def opposite_edge_dots(t: Tetrahedron) -> np.ndarray:
    """Dot products of the three opposite-edge pairs, in OPPOSITE_EDGE_PAIRS order."""
    return np.array(
        [
            dot(edge_vector(t, *e1), edge_vector(t, *e2))
            for e1, e2 in OPPOSITE_EDGE_PAIRS
        ]
    )


def altitudes_meet(t: Tetrahedron, i: int, j: int, tol: Tolerance = DEFAULT_TOL) -> bool:
    """True iff altitudes h_i and h_j intersect, i.e. edge kl is orthogonal to edge ij."""
    _check_edge(i, j)
    k, l = (x for x in range(4) if x not in (i, j))
    bkl = edge_vector(t, k, l)
    bij = edge_vector(t, i, j)
    return tol.is_zero(dot(bkl, bij), norm(bkl), norm(bij))


class TetraKind(Enum):
    GENERIC = "generic"
    SEMI_ORTHOCENTRIC = "semi_orthocentric"
    ORTHOCENTRIC = "orthocentric"


@dataclass(frozen=True)
class TetraClass:
    kind: TetraKind
    #: for the semi-orthocentric case, the orthogonal opposite-edge pair
    orthogonal_pair: Optional[tuple[tuple[int, int], tuple[int, int]]] = None
    #: set when tolerance noise produced a theoretically impossible zero pattern
    warning: Optional[str] = None


def classify(t: Tetrahedron, tol: Tolerance = DEFAULT_TOL) -> TetraClass:
    """Generic / semi-orthocentric / orthocentric by the opposite-edge dot products.

    Two zero dot products are impossible exactly (the third is forced to zero
    with them); such inputs resolve to orthocentric when the remaining dot is
    within ten times the gate, otherwise to generic with a warning.
    """
    dots = opposite_edge_dots(t)
    gates = np.array(
        [
            tol.gate(norm(edge_vector(t, *e1)), norm(edge_vector(t, *e2)))
            for e1, e2 in OPPOSITE_EDGE_PAIRS
        ]
    )
    zero = np.abs(dots) <= gates
    n_zero = int(zero.sum())
    if n_zero == 0:
        return TetraClass(TetraKind.GENERIC)
    if n_zero == 1:
        idx = int(np.argmax(zero))
        return TetraClass(TetraKind.SEMI_ORTHOCENTRIC, OPPOSITE_EDGE_PAIRS[idx])
    if n_zero == 3:
        return TetraClass(TetraKind.ORTHOCENTRIC)
    # exactly two zeros: numerically inconsistent
    idx = int(np.argmin(zero))
    if abs(dots[idx]) <= 10.0 * gates[idx]:
        return TetraClass(TetraKind.ORTHOCENTRIC)
    return TetraClass(
        TetraKind.GENERIC,
        warning="two opposite-edge dot products vanished but the third did not",
    )


@dataclass(frozen=True, eq=False)
class NoteworthyPoints:
    monge: Vec3
    centroid: Vec3
    circumcenter: Vec3
    orthocenter: Optional[Vec3]
    euler: Optional[Line3]


def noteworthy(t: Tetrahedron, tol: Tolerance = DEFAULT_TOL) -> NoteworthyPoints:
    """Monge point, centroid, circumcenter, optional orthocenter, optional Euler line.

    The centroid is the midpoint of the circumcenter and the Monge point; the
    Euler line is their join when they differ.  The orthocenter exists exactly
    in the orthocentric case and then coincides with the Monge point.
    """
    m = monge_point(t, tol)
    g = centroid(t)
    c = circumcenter(t, tol)
    h = m if classify(t, tol).kind is TetraKind.ORTHOCENTRIC else None
    euler = None
    if norm(c - m) > tol.gate(t.edge_scale()):
        euler = Line3(g, c - m)
    return NoteworthyPoints(m, g, c, h, euler)
