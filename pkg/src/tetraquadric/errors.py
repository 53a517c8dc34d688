"""Exception hierarchy shared by all modules."""


class GeometryError(Exception):
    """Base class for every error raised by this package."""


class SingularSystem(GeometryError):
    """Three plane normals are linearly dependent within tolerance."""


class ParallelPlanes(GeometryError):
    """Two plane normals are parallel within tolerance."""


class NoConvergence(GeometryError):
    """Iterative eigensolver exhausted its sweep budget."""


class NotTraceless(GeometryError):
    """A traceless form was required but the trace is not zero."""


class NotOnCone(GeometryError):
    """The given generator does not lie on the cone."""


class DegenerateForm(GeometryError):
    """The quadratic form does not have the rank required here."""


class BadIndex(GeometryError):
    """Vertex or edge index out of range, or a forbidden repetition."""


class BadPermutation(GeometryError):
    """An index quadruple is not a permutation of (0, 1, 2, 3)."""


class TrivialQuadric(GeometryError):
    """The altitude quadric degenerated to the zero form."""


class NotHyperboloid(GeometryError):
    """The operation needs the nondegenerate hyperboloid case."""


class DegenerateTetrahedron(GeometryError):
    """The four vertices are coplanar within tolerance."""


class PlaneMissesLeg(GeometryError):
    """The cutting plane is parallel to a tripod leg or passes through the apex."""


class CollinearPoints(GeometryError):
    """Three points expected to span a triangle are collinear."""


class ZeroOffset(GeometryError):
    """A nonzero section offset is required."""


class EmptyFamily(GeometryError):
    """A nonempty triangle family is required."""


class ParseError(GeometryError):
    """Malformed input document."""


class InternalInvariantError(GeometryError):
    """A structurally impossible configuration was produced; indicates a bug."""
