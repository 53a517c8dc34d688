"""Walk through the classical point zoo of a general tetrahedron.

The four altitudes of a generic tetrahedron do not meet in a point, so there
is no orthocenter.  Its stand-in is the Monge point: the common point of the
six midplanes (each perpendicular to one edge, through the midpoint of the
opposite edge).  This script computes the Monge point, the centroid and the
circumcenter, checks that the centroid bisects the segment between the other
two, and shows that each face perpendicular meets every altitude it is not
parallel to.
"""

import numpy as np

from tetraquadric import (
    Tetrahedron,
    altitude,
    centroid,
    circumcenter,
    line_line_meet,
    midplane,
    monge_point,
    noteworthy,
    ortho_perpendicular,
)
from tetraquadric.core import LineRelation

T = Tetrahedron(np.array([[0, 0, 0], [4, 0, 0], [1, 3, 0], [2, 1, 2.0]]))

m = monge_point(T)
g = centroid(T)
c = circumcenter(T)

print("Monge point  M =", m)
print("centroid     G =", g)
print("circumcenter C =", c)
print("|G - (C+M)/2|  =", np.linalg.norm(g - 0.5 * (c + m)))

print("\nresidual of M on each of the six midplanes:")
for i in range(4):
    for j in range(i + 1, 4):
        print(f"  midplane {i}{j}: {abs(midplane(T, i, j).residual(m)):.2e}")

print("\naltitude pairs (generic: all skew):")
for a in range(4):
    for b in range(a + 1, 4):
        mm = line_line_meet(altitude(T, a), altitude(T, b))
        print(f"  h{a} vs h{b}: {mm.relation.name.lower()}  gap {mm.gap:.3f}")

print("\neach face perpendicular n_l meets the other three altitudes:")
for l in range(4):
    for i in range(4):
        if i == l:
            continue
        mm = line_line_meet(ortho_perpendicular(T, l), altitude(T, i))
        assert mm.relation is LineRelation.MEETING
        print(f"  n{l} ∩ h{i} at {np.round(mm.point, 6)}")

pts = noteworthy(T)
print("\nEuler line direction:", pts.euler.dir)
