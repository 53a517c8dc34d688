"""Vector, line, and plane primitives plus the small linear solves built on them.

Vectors are plain numpy arrays of shape (3,); lines and planes are small
immutable records.  All zero tests go through a scale-relative tolerance so
that the exact conditions of the underlying geometry survive floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from .errors import ParallelPlanes, SingularSystem

Vec3 = np.ndarray


def vec(x: float, y: float, z: float) -> Vec3:
    return np.array([x, y, z], dtype=float)


def as_vec(v) -> Vec3:
    a = np.asarray(v, dtype=float)
    if a.shape != (3,):
        raise ValueError(f"expected a 3-vector, got shape {a.shape}")
    return a


def dot(u: Vec3, v: Vec3) -> float:
    """Euclidean inner product."""
    return float(np.dot(u, v))


def cross(u: Vec3, v: Vec3) -> Vec3:
    return np.cross(u, v)


def norm(v: Vec3) -> float:
    return float(np.linalg.norm(v))


def triple(u: Vec3, v: Vec3, w: Vec3) -> float:
    """Determinant of the 3x3 matrix with rows u, v, w."""
    return float(np.linalg.det(np.array([u, v, w], dtype=float)))


def normalize(v: Vec3) -> Vec3:
    n = norm(v)
    if n == 0.0:
        raise ValueError("cannot normalize the zero vector")
    return v / n


def canonical_dir(v: Vec3) -> Vec3:
    """Unit vector with the first component of significant size made positive.

    Lines are sets, so a direction and its negative describe the same line;
    this picks one representative deterministically.
    """
    u = normalize(v)
    for c in u:
        if abs(c) > 1e-12:
            return -u if c < 0 else u
    return u


@dataclass(frozen=True)
class Tolerance:
    """Scale-relative comparison gate: |value| <= rel_eps * scale + abs_eps."""

    rel_eps: float = 1e-9
    abs_eps: float = 1e-12

    def __post_init__(self):
        if self.rel_eps <= 0 or self.abs_eps <= 0:
            raise ValueError("tolerances must be positive")

    def gate(self, *scales: float) -> float:
        s = 1.0
        for x in scales:
            s *= abs(x)
        return self.rel_eps * s + self.abs_eps

    def is_zero(self, value: float, *scales: float) -> bool:
        return abs(value) <= self.gate(*scales)


DEFAULT_TOL = Tolerance()


@dataclass(frozen=True, eq=False)
class Line3:
    """Line given by a base point and a unit direction."""

    base: Vec3
    dir: Vec3

    def __post_init__(self):
        object.__setattr__(self, "base", as_vec(self.base))
        object.__setattr__(self, "dir", canonical_dir(as_vec(self.dir)))

    def point_at(self, t: float) -> Vec3:
        return self.base + t * self.dir

    def distance_to_point(self, p: Vec3) -> float:
        off = p - self.base
        return norm(off - dot(off, self.dir) * self.dir)


@dataclass(frozen=True, eq=False)
class Plane3:
    """Plane { x : normal . x = offset } with a unit, sign-canonical normal."""

    normal: Vec3
    offset: float

    def __post_init__(self):
        n = as_vec(self.normal)
        u = canonical_dir(n)
        # keep offset consistent with the canonicalized normal
        off = float(self.offset) / norm(n)
        if dot(u, normalize(n)) < 0:
            off = -off
        object.__setattr__(self, "normal", u)
        object.__setattr__(self, "offset", off)

    @classmethod
    def from_point_normal(cls, point: Vec3, normal: Vec3) -> "Plane3":
        n = as_vec(normal)
        return cls(n, dot(n, as_vec(point)))

    def residual(self, x: Vec3) -> float:
        return abs(dot(self.normal, x) - self.offset)

    def foot(self) -> Vec3:
        """Point of the plane closest to the origin."""
        return self.offset * self.normal


def plane_basis(normal: Vec3) -> tuple[Vec3, Vec3]:
    """Deterministic orthonormal in-plane basis (u, v) with u x v = normal-hat."""
    n = normalize(normal)
    k = np.zeros(3)
    k[int(np.argmin(np.abs(n)))] = 1.0
    u = normalize(cross(n, k))
    v = cross(n, u)
    return u, v


def solve3(p1: Plane3, p2: Plane3, p3: Plane3, tol: Tolerance = DEFAULT_TOL) -> Vec3:
    """Unique common point of three planes with independent normals."""
    a = np.array([p1.normal, p2.normal, p3.normal])
    det = float(np.linalg.det(a))
    # normals are unit vectors, so the natural scale of the determinant is 1
    if abs(det) <= tol.gate(1.0):
        raise SingularSystem("plane normals are linearly dependent")
    return np.linalg.solve(a, np.array([p1.offset, p2.offset, p3.offset]))


def line_from_two_planes(p1: Plane3, p2: Plane3, tol: Tolerance = DEFAULT_TOL) -> Line3:
    """Intersection line of two nonparallel planes."""
    d = cross(p1.normal, p2.normal)
    if norm(d) <= tol.gate(1.0):
        raise ParallelPlanes("plane normals are parallel")
    d = normalize(d)
    a = np.array([p1.normal, p2.normal, d])
    base = np.linalg.solve(a, np.array([p1.offset, p2.offset, 0.0]))
    return Line3(base, d)


class LineRelation(Enum):
    IDENTICAL = "identical"
    PARALLEL = "parallel"
    MEETING = "meeting"
    SKEW = "skew"


@dataclass(frozen=True, eq=False)
class LineMeet:
    relation: LineRelation
    point: Optional[Vec3]
    gap: float


def line_line_meet(l1: Line3, l2: Line3, tol: Tolerance = DEFAULT_TOL) -> LineMeet:
    """Classify the mutual position of two lines; Meeting carries the common point.

    The decision is scale-relative in the magnitudes of the base points, so
    lines far from the origin are not spuriously declared intersecting.
    """
    d1, d2 = l1.dir, l2.dir
    c = cross(d1, d2)
    scale = max(1.0, norm(l1.base), norm(l2.base))
    w = l2.base - l1.base
    if norm(c) <= tol.gate(1.0):
        gap = l1.distance_to_point(l2.base)
        if gap <= tol.gate(scale):
            return LineMeet(LineRelation.IDENTICAL, None, gap)
        return LineMeet(LineRelation.PARALLEL, None, gap)
    gap = abs(dot(w, c)) / norm(c)
    # closest points: minimize |l1(t1) - l2(t2)|
    a11 = 1.0
    a12 = -dot(d1, d2)
    a22 = 1.0
    b1 = dot(w, d1)
    b2 = -dot(w, d2)
    det = a11 * a22 - a12 * a12
    t1 = (b1 * a22 - a12 * b2) / det
    t2 = (a11 * b2 - a12 * b1) / det
    q1 = l1.point_at(t1)
    q2 = l2.point_at(t2)
    if gap <= tol.gate(scale):
        return LineMeet(LineRelation.MEETING, 0.5 * (q1 + q2), gap)
    return LineMeet(LineRelation.SKEW, None, gap)
