"""Exception taxonomy shared across the package."""


class GraphError(Exception):
    """Base class for all library errors."""


class InvalidParameterError(GraphError):
    """A size or option is out of range or meaningless for the operation."""


class CapacityError(GraphError):
    """The 64-vertex bitset capacity would be exceeded."""


class FormatError(GraphError):
    """Malformed text input (edge list, graph6, rotation file)."""


class SetCountCapError(GraphError):
    """Enumeration aborted: more maximal independent sets than the cap allows."""


class InvalidThetaSpecError(GraphError):
    """A (j, k, l) triple does not describe a simple theta graph."""


class NotALineGraphError(GraphError):
    """No Krausz partition exists: the input is not a line graph."""


class DiamondFoundError(GraphError):
    """The input contains an induced K_4 minus an edge, so no seed exists."""


class RotationError(GraphError):
    """Rotation system inconsistent with the graph."""


class NonSimpleDualError(GraphError):
    """Face tracing produced a dual with loops or parallel edges."""


class NotCubicError(GraphError):
    """Planar-seed input must be 3-regular."""


class NotBipartiteError(GraphError):
    """Planar-seed input must be bipartite."""


class NotConnectedError(GraphError):
    """Operation requires a connected input."""


class NotPlanarEmbeddingError(GraphError):
    """Rotation system does not describe a sphere embedding (Euler check failed)."""


class DeletionPreconditionError(GraphError):
    """Triangle surgery preconditions violated (not a maximal-clique triangle,
    not an i-set of the complement, or the i-set family would become empty)."""

