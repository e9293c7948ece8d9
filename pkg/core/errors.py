"""
Exceptions raised by the zerocap library.

Each error also derives from the builtin it replaces (ValueError for bad
input, RuntimeError for resource problems), so callers can catch either.
"""

from typing import Optional


class ZeroCapError(Exception):
    """Base class for every zerocap error."""


class MachineSyntaxError(ZeroCapError, ValueError):
    """A machine document could not be read (bad JSON or bad shape)."""

    def __init__(self, message: str, line: Optional[int] = None,
                 column: Optional[int] = None, path: str = ""):
        self.line = line
        self.column = column
        self.path = path
        where = ""
        if line is not None:
            where = f" at line {line}, column {column}"
        elif path:
            where = f" at field '{path}'"
        super().__init__(f"Syntax error{where}: {message}")


class MachineValidationError(ZeroCapError, ValueError):
    """A machine parsed but violates one or more invariants."""

    def __init__(self, report):
        self.report = report
        names = ", ".join(check.name for check in report.failures)
        super().__init__(f"Machine failed validation: {names}")


class InfeasibleNoiseError(ZeroCapError, ValueError):
    """A noise symbol labels no outgoing edge of the current state."""

    def __init__(self, state: int, noise: int):
        self.state = state
        self.noise = noise
        super().__init__(f"Noise z={noise} is infeasible from state {state}")


class ConvergenceError(ZeroCapError, RuntimeError):
    """Power iteration hit its iteration cap."""

    def __init__(self, iterations: int, tol: float):
        self.iterations = iterations
        self.tol = tol
        super().__init__(
            f"Power iteration did not converge to tol={tol:g} in {iterations} iterations; "
            "loosen the tolerance or raise the iteration cap"
        )


class ResourceGuardError(ZeroCapError, RuntimeError):
    """An exhaustive computation would exceed its configured size guard."""

    def __init__(self, guard: str, limit: int, needed: Optional[int] = None):
        self.guard = guard
        self.limit = limit
        self.needed = needed
        detail = f" (needs {needed})" if needed is not None else ""
        super().__init__(f"Guard '{guard}' exceeded: limit {limit}{detail}")


class CapacityZeroError(ZeroCapError, ValueError):
    """The operation needs a channel with positive zero-error capacity."""


class ParameterError(ZeroCapError, ValueError):
    """Bad probabilities or an unsupported parametrization."""


class LengthMismatchError(ZeroCapError, ValueError):
    """Two words that must have equal length do not."""
