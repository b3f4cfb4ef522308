"""Exception hierarchy shared by the solver, the simulator and the CLI."""


class CascadeError(Exception):
    """Base class for all netcascade errors."""


class DomainError(CascadeError, ValueError):
    """An argument lies outside the domain of the operation."""


class NumericalError(CascadeError, ArithmeticError):
    """A numerical procedure failed (unbracketed root, unconverged requirement)."""
