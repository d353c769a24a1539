"""Exception types shared across the package."""


class HypergraphError(Exception):
    """Base class for every error raised by this package."""


class OutOfRangeVertex(HypergraphError):
    """An edge references a vertex id outside [0, num_vertices)."""


class DuplicateVertexInEdge(HypergraphError):
    """An edge lists the same vertex id more than once."""


class InvalidParameters(HypergraphError):
    """Arguments fall outside an operation's documented domain."""


class MissingVertexColor(HypergraphError):
    """A coloring does not assign a color to every vertex."""


class NotRegular(HypergraphError):
    """Operation requires a regular hypergraph."""


class TooLarge(HypergraphError):
    """Instance exceeds the exact solver's vertex cap."""


class NotPrime(HypergraphError):
    """Projective plane order must be prime."""


class GenerationFailed(HypergraphError):
    """Randomized construction exhausted its retry budget."""


class FormatError(HypergraphError):
    """A file or config does not match the expected format."""
