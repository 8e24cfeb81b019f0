"""Equivalent beams: SU(2)-coherent Q-representations, separable equivalents of
Werner beams, OAM information transfer and a single-quNit classifier."""

from .classifier import (
    ClassifierModel,
    TrainConfig,
    build_unitary,
    encode,
    gell_mann_basis,
    hadamard_general,
    map_multiqubit_index,
    predict,
    train,
)
from .equivalence import (
    c_entropy,
    equivalence_check,
    equivalent_observable,
    equivalent_state,
    mixedness,
    ppt_min_eig,
    q_function,
    separable_decomposition_T1,
    werner_state,
    werner_t_min,
)
from .optics import Grid, LGMode, coherent_beam_intensity, i_diff, lg_field, mixed_beam_intensity
from .protocol import bell_project, correction, retrieve_bloch, run_protocol
from .su import Spin, coherent_state, herm_exp, make_generators, resolution_of_identity_residual, wigner_rotation

__version__ = "0.1.0"
