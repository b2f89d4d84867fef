"""Entanglement dynamics of two static atoms near a cosmic string."""

from .analysis import first_death_time
from .dynamics import (
    EvolutionSettings,
    PauliState,
    Trajectory,
    derivative,
    equilibrium,
    evolve,
    state_at,
    werner_state,
)
from .entanglement import concurrence, density_matrix
from .errors import (
    ConfigError,
    ConvergenceError,
    CosmicEntanglementError,
    PhysicalityError,
    SingularGeneratorError,
)
from .kossakowski import (
    AXIAL,
    ISOTROPIC,
    RADIAL,
    TANGENTIAL,
    DipolePair,
    KossakowskiCoefficients,
    compute_coefficients,
    kossakowski_matrix,
)
from .response import (
    GeometryParams,
    ResponseTensors,
    SummationControl,
    cross_response,
    flat_space_response,
    on_string_response,
    same_point_response,
)

__version__ = "0.1.0"
