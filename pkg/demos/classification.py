"""Three kinds of tetrahedra, told apart by their opposite-edge products.

A tetrahedron is orthocentric when every pair of opposite edges is
orthogonal (all three dot products vanish, all four altitudes concur),
semi-orthocentric when exactly one pair is orthogonal (the altitude quadric
collapses to a pair of orthogonal planes), and generic otherwise.  Here we
generate samples of each kind, classify them, and print the witnesses.
"""

import numpy as np

from tetraquadric import (
    TetraKind,
    altitude,
    build,
    classify,
    line_line_meet,
    opposite_edge_dots,
    random_tetra,
)

for kind in (TetraKind.GENERIC, TetraKind.SEMI_ORTHOCENTRIC, TetraKind.ORTHOCENTRIC):
    t = random_tetra(kind, seed=7)
    cls = classify(t)
    dots = opposite_edge_dots(t)
    print(f"requested {kind.name.lower():17s} -> classified {cls.kind.name.lower()}")
    print("  opposite-edge dot products:", np.round(dots, 6))

    qd = build(t)
    print("  altitude quadric:", qd.kind.name.lower())
    if cls.orthogonal_pair is not None:
        print("  orthogonal edge pair:", cls.orthogonal_pair)
        n1, n2 = qd.planes[0].normal, qd.planes[1].normal
        print("  plane-pair normal dot:", float(np.dot(n1, n2)))
    if kind is TetraKind.ORTHOCENTRIC:
        pts = [
            line_line_meet(altitude(t, a), altitude(t, b)).point
            for a in range(4)
            for b in range(a + 1, 4)
        ]
        spread = float(np.max(np.ptp(np.array(pts), axis=0)))
        print(f"  four altitudes concurrent, meet-point spread {spread:.2e}")
    print()
