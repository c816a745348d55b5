"""Exception taxonomy.

Errors are grouped by how the command-line surface reports them: malformed
input (exit 1), exceeded resource bounds (exit 2), and violated mathematical
preconditions (exit 3).
"""


class NonfreeError(Exception):
    """Base class for all library errors."""


class InputError(NonfreeError):
    """Malformed or inconsistent input document."""


class DegreeMismatch(InputError):
    """Generators do not share a common degree."""


class ResourceBoundError(NonfreeError):
    """A configured size bound was exceeded."""


class OrderBoundExceeded(ResourceBoundError):
    """Group too large to materialize fully."""


class LatticeBoundExceeded(ResourceBoundError):
    """Too many subgroups for the configured lattice limit."""


class TableBoundExceeded(ResourceBoundError):
    """Group too large for character table computation."""


class GroupoidBoundExceeded(ResourceBoundError):
    """Too many trajectory pairs for exact operator computations."""


class IsoSearchBoundExceeded(ResourceBoundError):
    """Too many points for the exhaustive isomorphism search."""


class MathPreconditionError(NonfreeError):
    """A mathematical precondition of an operation is violated."""


class NonInvariantMeasure(MathPreconditionError):
    """Measure is not invariant under the group action."""


class NotExtremelyNonfree(MathPreconditionError):
    """Operation is only defined for extremely nonfree actions."""


class NegativeWeight(MathPreconditionError):
    """A spectral decomposition weight came out negative."""
