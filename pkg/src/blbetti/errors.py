"""Exception hierarchy shared by the library and the command line."""


class BLBettiError(Exception):
    """Base class for all errors raised by this package."""


class GraphError(BLBettiError, ValueError):
    """Malformed graph data: loops, out-of-range endpoints, bad vertex sets."""


class ApplicabilityError(BLBettiError, ValueError):
    """A closed form or oracle was called outside its hypotheses."""


class InconsistencyError(BLBettiError, ValueError):
    """Input data that cannot come from any graph (e.g. an unrealizable Betti vector)."""


class VerificationError(BLBettiError, AssertionError):
    """Two routes that must agree produced different answers."""


class ApplicabilityWarning(UserWarning):
    """A closed form was used at the edge of its stated hypotheses."""
