"""Quadratic forms on 3-space.

Covers the polar form, the basis-independent trace, principal-axes
decomposition via cyclic Jacobi rotations, the three-way classification of
traceless forms (zero form / orthogonal plane pair / equilateral cone), and
the orthogonal tripods carried by every equilateral cone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from .core import (
    DEFAULT_TOL,
    Plane3,
    Tolerance,
    Vec3,
    as_vec,
    canonical_dir,
    norm,
    normalize,
    plane_basis,
)
from .errors import DegenerateForm, NoConvergence, NotOnCone, NotTraceless

_SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class QuadForm3:
    """Symmetric quadratic form; off-diagonal coefficients stored once."""

    s11: float
    s22: float
    s33: float
    s12: float = 0.0
    s13: float = 0.0
    s23: float = 0.0

    @classmethod
    def from_matrix(cls, m: np.ndarray) -> "QuadForm3":
        m = np.asarray(m, dtype=float)
        sym = 0.5 * (m + m.T)
        return cls(sym[0, 0], sym[1, 1], sym[2, 2], sym[0, 1], sym[0, 2], sym[1, 2])

    @classmethod
    def diagonal(cls, d1: float, d2: float, d3: float) -> "QuadForm3":
        return cls(d1, d2, d3)

    @classmethod
    def zero(cls) -> "QuadForm3":
        return cls(0.0, 0.0, 0.0)

    @property
    def matrix(self) -> np.ndarray:
        return np.array(
            [
                [self.s11, self.s12, self.s13],
                [self.s12, self.s22, self.s23],
                [self.s13, self.s23, self.s33],
            ]
        )

    @property
    def coefficients(self) -> tuple[float, float, float, float, float, float]:
        return (self.s11, self.s22, self.s33, self.s12, self.s13, self.s23)

    def max_abs(self) -> float:
        return max(abs(c) for c in self.coefficients)

    def __add__(self, other: "QuadForm3") -> "QuadForm3":
        return QuadForm3(*(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __sub__(self, other: "QuadForm3") -> "QuadForm3":
        return QuadForm3(*(a - b for a, b in zip(self.coefficients, other.coefficients)))

    def __neg__(self) -> "QuadForm3":
        return QuadForm3(*(-c for c in self.coefficients))

    def __mul__(self, scalar: float) -> "QuadForm3":
        return QuadForm3(*(scalar * c for c in self.coefficients))

    __rmul__ = __mul__


def evaluate(q: QuadForm3, x: Vec3) -> float:
    """Value x^T Sigma x of the form at x."""
    x = as_vec(x)
    return float(x @ q.matrix @ x)


def polar(q: QuadForm3, v: Vec3, w: Vec3) -> float:
    """Symmetric bilinear form associated with q; polar(q, v, v) = evaluate(q, v)."""
    return float(as_vec(v) @ q.matrix @ as_vec(w))


def outer_sym(c: Vec3, d: Vec3) -> QuadForm3:
    """Form x -> (x.c)(x.d); its trace equals c.d."""
    c, d = as_vec(c), as_vec(d)
    return QuadForm3.from_matrix(0.5 * (np.outer(c, d) + np.outer(d, c)))


def trace(q: QuadForm3) -> float:
    return q.s11 + q.s22 + q.s33


@dataclass(frozen=True, eq=False)
class EigenFrame:
    """Principal axes (rows of `axes`) and eigenvalues sorted descending."""

    values: np.ndarray
    axes: np.ndarray

    def reconstruct(self) -> np.ndarray:
        return sum(
            self.values[r] * np.outer(self.axes[r], self.axes[r]) for r in range(3)
        )


def eigendecompose(q: QuadForm3, tol: Tolerance = DEFAULT_TOL) -> EigenFrame:
    """Diagonalize with cyclic Jacobi rotations.

    Convergence: off-diagonal Frobenius norm below 1e-14 of the diagonal norm,
    at most 50 sweeps.  Output is deterministic: eigenvalues descending,
    eigenvector signs canonicalized on the largest-magnitude component.
    """
    a = q.matrix.copy()
    v = np.eye(3)
    for _ in range(50):
        off = math.sqrt(2.0 * (a[0, 1] ** 2 + a[0, 2] ** 2 + a[1, 2] ** 2))
        diag = max(1e-300, float(np.linalg.norm(np.diag(a))))
        if off <= 1e-14 * max(diag, q.max_abs(), 1e-300):
            break
        for p, r in ((0, 1), (0, 2), (1, 2)):
            apr = a[p, r]
            if apr == 0.0:
                continue
            theta = (a[r, r] - a[p, p]) / (2.0 * apr)
            t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(1.0 + theta * theta))
            c = 1.0 / math.sqrt(1.0 + t * t)
            s = t * c
            rot = np.eye(3)
            rot[p, p] = rot[r, r] = c
            rot[p, r] = s
            rot[r, p] = -s
            a = rot.T @ a @ rot
            v = v @ rot
    else:
        raise NoConvergence("Jacobi iteration did not converge in 50 sweeps")

    values = np.diag(a).copy()
    order = np.argsort(-values)
    values = values[order]
    axes = v.T[order]
    for r in range(3):
        lead = int(np.argmax(np.abs(axes[r])))
        if axes[r][lead] < 0:
            axes[r] = -axes[r]
    return EigenFrame(values, axes)


def rank(q: QuadForm3, tol: Tolerance = DEFAULT_TOL) -> int:
    """Number of eigenvalues significantly different from zero."""
    values = eigendecompose(q, tol).values
    thresh = tol.gate(max(1.0, float(np.max(np.abs(values)))))
    return int(np.sum(np.abs(values) > thresh))


class TracelessKind(Enum):
    ZERO_FORM = "zero_form"
    ORTHOGONAL_PLANE_PAIR = "orthogonal_plane_pair"
    EQUILATERAL_CONE = "equilateral_cone"


@dataclass(frozen=True, eq=False)
class TracelessClass:
    kind: TracelessKind
    planes: Optional[tuple[Plane3, Plane3]] = None


def classify_traceless(q: QuadForm3, tol: Tolerance = DEFAULT_TOL) -> TracelessClass:
    """Three-way classification of a traceless form by its rank.

    A traceless form cannot have rank 1 exactly; a measured rank of 1 is
    noise and is mapped to the zero form.
    """
    if abs(trace(q)) > tol.gate(max(1.0, q.max_abs())):
        raise NotTraceless(f"trace is {trace(q)}, not zero")
    r = rank(q, tol)
    if r <= 1:
        return TracelessClass(TracelessKind.ZERO_FORM)
    if r == 2:
        frame = eigendecompose(q, tol)
        # eigenvalues are (s, 0, -s); zero set is the plane pair xi1 = +-xi3
        e1, e3 = frame.axes[0], frame.axes[2]
        p1 = Plane3((e1 + e3) / _SQRT2, 0.0)
        p2 = Plane3((e1 - e3) / _SQRT2, 0.0)
        return TracelessClass(TracelessKind.ORTHOGONAL_PLANE_PAIR, (p1, p2))
    return TracelessClass(TracelessKind.EQUILATERAL_CONE)


@dataclass(frozen=True, eq=False)
class Tripod:
    """Three mutually orthogonal unit directions, all on the cone Q = 0."""

    legs: tuple[Vec3, Vec3, Vec3]


def tripod_through_generator(
    q: QuadForm3, g: Vec3, tol: Tolerance = DEFAULT_TOL
) -> Tripod:
    """Orthogonal tripod of cone generators containing the generator g.

    The two companion legs are found by diagonalizing the restriction of the
    form to the plane orthogonal to g; the restriction is traceless there, so
    its zero lines are the diagonals of its principal axes.
    """
    g = as_vec(g)
    if norm(g) == 0.0:
        raise NotOnCone("zero vector is not a generator")
    if rank(q, tol) < 3:
        raise DegenerateForm("cone requires a rank-3 traceless form")
    ghat = normalize(g)
    if abs(evaluate(q, ghat)) > tol.gate(max(1.0, q.max_abs())):
        raise NotOnCone(f"Q(g) = {evaluate(q, ghat)} is not zero")
    m2, (u, v) = restrict_to_plane(q, Plane3(ghat, 0.0))
    theta = 0.5 * math.atan2(2.0 * m2[0, 1], m2[0, 0] - m2[1, 1])
    e1 = math.cos(theta) * u + math.sin(theta) * v
    e2 = -math.sin(theta) * u + math.cos(theta) * v
    leg1 = canonical_dir((e1 + e2) / _SQRT2)
    leg2 = canonical_dir((e1 - e2) / _SQRT2)
    return Tripod((canonical_dir(ghat), leg1, leg2))


def restrict_to_plane(
    q: QuadForm3, p: Plane3
) -> tuple[np.ndarray, tuple[Vec3, Vec3]]:
    """2x2 matrix of the form restricted to the plane, with the basis used.

    Only the direction of the plane matters; its trace satisfies
    trace(restriction) = trace(q) - q(normal).
    """
    u, v = plane_basis(p.normal)
    m2 = np.array(
        [
            [polar(q, u, u), polar(q, u, v)],
            [polar(q, u, v), polar(q, v, v)],
        ]
    )
    return m2, (u, v)
