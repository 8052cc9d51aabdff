"""Exception types shared across the package."""


class ArbisimError(Exception):
    """Base class for all package errors."""


class DegeneratePolygonError(ArbisimError):
    """Raised when a polygon with zero area is used as an overlap reference."""


class ScenarioError(ArbisimError):
    """Raised when a scenario file or object violates its invariants."""


class NoRouteError(ArbisimError):
    """Raised when a planner is invoked without a usable route."""


class EmptyBankError(ArbisimError):
    """Raised when the scripted planner has no maneuver scripts to render."""


class NoValidOptionError(ArbisimError):
    """Raised when the arbitration graph cannot produce any trajectory.

    Only possible when the graph is misconfigured without a last-resort
    behavior.
    """


class HorizonTooShortError(ArbisimError):
    """Raised when a trajectory is shorter than the verification horizon."""


class TrajectoryTooShortError(ArbisimError):
    """Raised when a trajectory has too few samples for finite differences."""
