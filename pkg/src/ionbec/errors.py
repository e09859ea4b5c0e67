"""Exception and warning types shared across the library.

The split matters for the CLI exit codes: ValidationError and DimensionError
are bad-input (usage) problems, everything else derived from SimulationError
signals a physics/regime/numerics failure on otherwise well-formed input.
"""


class IonbecError(Exception):
    """Base class for all library errors."""


class DimensionError(IonbecError, ValueError):
    """Unit tag incompatible with the quantity's dimension."""


class ValidationError(IonbecError, ValueError):
    """Malformed or unphysical input data (species files, constructor args)."""


class SimulationError(IonbecError):
    """Base for errors raised during a physically meaningful computation."""


class DomainError(SimulationError, ValueError):
    """Argument outside the mathematical domain of an operation."""


class RegimeError(SimulationError, ValueError):
    """Input is formally valid but outside the modeled physical regime."""


class NumericsError(SimulationError, RuntimeError):
    """A numerical procedure (bracketing, quadrature, scan) failed to converge."""


class TruncationError(NumericsError):
    """Time integration hit its step budget; carries the partial series."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class DilutenessWarning(UserWarning):
    """Gas parameter n*a^3 large enough that leading-order formulas degrade."""


class RegimeWarning(UserWarning):
    """Asymptotic formula evaluated outside its nominal validity range."""
