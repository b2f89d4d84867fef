"""Exception hierarchy shared by the numerical modules and the CLI."""


class CosmicEntanglementError(Exception):
    """Base class; ``exit_code`` is what the CLI returns for it."""

    exit_code = 1


class ConfigError(CosmicEntanglementError, ValueError):
    exit_code = 2


class BesselDomainError(CosmicEntanglementError, ValueError):
    exit_code = 2


class ConvergenceError(CosmicEntanglementError, RuntimeError):
    """Mode sum or quadrature failed to settle within the allowed budget.

    ``partial`` holds the last partial sums so callers can inspect how far
    off the estimate was.
    """

    exit_code = 3

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class PhysicalityError(CosmicEntanglementError, ValueError):
    exit_code = 4


class SingularGeneratorError(CosmicEntanglementError, ValueError):
    exit_code = 4
