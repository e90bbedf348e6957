"""Exception types raised by the public API.

Every error carries a human-readable message that names the offending
elements, so callers can surface it directly.
"""


class LatdualError(Exception):
    """Base class for all errors raised by this package."""


class NotAPartialOrder(LatdualError):
    """The input relation is not reflexive, antisymmetric and transitive."""


class NotALattice(LatdualError):
    """Some pair of elements lacks a meet or a join."""


class NoLowerCovers(LatdualError):
    """Asked for the meet of lower covers of the bottom element."""


class EmptyInterval(LatdualError):
    """Interval endpoints are not ordered, so the interval is empty."""


class NotReflexive(LatdualError):
    """A digraph operation requires a loop at every vertex."""


class NotDisjoint(LatdualError):
    """Filter and ideal generators are comparable, so the pair is not disjoint."""


class NotMeetDistributive(LatdualError):
    """The construction requires a meet-distributive lattice."""


class BoundTooLarge(LatdualError):
    """Requested an exhaustive enumeration beyond the supported size."""


class UnknownProperty(LatdualError):
    """Property name is not registered for this kind of object."""
