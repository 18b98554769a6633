"""Exception hierarchy shared by every module.

The CLI maps these onto exit codes, so each class corresponds to one
failure category rather than to one call site.
"""


class ToricError(Exception):
    """Base class for all errors raised by this package."""


class StructuralError(ToricError):
    """A fan fails validation (non-primitive ray, duplicate cone, ...)."""


class ParameterError(ToricError):
    """An argument is outside the documented range."""


class BranchError(ParameterError):
    """No branch of a piecewise formula applies to the given inputs."""


class ContractError(ToricError):
    """An input violates an operation's precondition."""


class ResourceError(ToricError):
    """A computation would exceed its configured enumeration budget."""


class ConsistencyError(ToricError):
    """An internal invariant failed; indicates a bug or a contract violation upstream."""
