"""The quadric carrying all four altitudes of a generic tetrahedron.

For a generic tetrahedron the four altitudes and the four face
perpendiculars are generators of one hyperboloid of one sheet, centered at
the Monge point, whose asymptotic cone is equilateral (traceless quadratic
form).  The altitudes fill one regulus, the perpendiculars the other.  The
script builds the quadric, verifies the incidences numerically, and writes a
triangulated patch to quadric.obj for inspection in any mesh viewer.
"""

import numpy as np

from tetraquadric import (
    Tetrahedron,
    altitude,
    asymptotic_cone,
    build,
    classify_traceless,
    contains_line,
    evaluate,
    mesh_to_obj,
    ortho_perpendicular,
    quadric_mesh,
    regulus_of,
    trace,
)

T = Tetrahedron(np.array([[0, 0, 0], [4, 0, 0], [1, 3, 0], [2, 1, 2.0]]))
qd = build(T)

print("kind   :", qd.kind.name)
print("center :", qd.center)
print("level  :", qd.rhs)
print("trace  :", trace(qd.form))
print("cone   :", classify_traceless(asymptotic_cone(qd)).kind.name)

for l in range(4):
    h, n = altitude(T, l), ortho_perpendicular(T, l)
    assert contains_line(qd, h) and contains_line(qd, n)
    print(
        f"line {l}: altitude -> {regulus_of(qd, h, T).name.lower()}, "
        f"perpendicular -> {regulus_of(qd, n, T).name.lower()}"
    )

# sample a vertex of the written mesh back through the quadratic form
mesh = quadric_mesh(qd, extent=3.0, resolution=48)
v = np.asarray(mesh.vertices[0])
print("mesh vertex residual:", abs(evaluate(qd.form, v - qd.center) - qd.rhs))

with open("quadric.obj", "w") as fh:
    fh.write(mesh_to_obj(mesh))
print(f"wrote quadric.obj ({len(mesh.vertices)} vertices, {len(mesh.triangles)} faces)")
