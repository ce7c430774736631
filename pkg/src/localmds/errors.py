"""Exception taxonomy shared by every module.

Library code raises these; the CLI maps them onto exit codes and a
machine-readable error category (see cli.py).
"""


class LocalMdsError(Exception):
    """Base class for all errors raised by this package."""


class InputError(LocalMdsError, ValueError):
    """Malformed caller input: bad labels, radii, parameters, or files."""


class EnumerationBudgetError(LocalMdsError, RuntimeError):
    """An exact search exceeded its configured budget.

    Raised instead of silently truncating: a partial enumeration would
    corrupt any selection made from it.
    """


class InvariantError(LocalMdsError, RuntimeError):
    """An internal precondition failed. Signals a bug, not bad input."""


class RuleError(LocalMdsError, RuntimeError):
    """A local rule failed while evaluating one vertex's view."""

    def __init__(self, center: int, message: str):
        self.center = center
        super().__init__(f"rule failed at vertex {center}: {message}")
