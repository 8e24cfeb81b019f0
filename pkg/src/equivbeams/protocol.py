"""Path -> OAM information transfer through a polarisation-OAM Werner channel.

The three degrees of freedom are ordered path (A, 2) (x) polarisation (B, 2)
(x) OAM (C, 2T+1).  Polarisation kets map to qubit kets as |H) -> |0), |V) -> |1).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .equivalence import PAULI, equivalent_observable, pauli_state, projector, werner_bounds, werner_state
from .errors import OutOfRangeError, SingularityError, ZeroWeightError
from .su import Spin, as_spin, make_generators, wigner_rotation

_r = 1 / np.sqrt(2)

# |psi_k) over A (x) B in the basis |0H), |0V), |1H), |1V)
BELL_BEAMS = {
    1: np.array([0, _r, -_r, 0], dtype=complex),  # (|0)|V) - |1)|H)) / sqrt 2
    2: np.array([_r, 0, 0, -_r], dtype=complex),  # (|0)|H) - |1)|V)) / sqrt 2
    3: np.array([_r, 0, 0, _r], dtype=complex),  # (|0)|H) + |1)|V)) / sqrt 2
    4: np.array([0, _r, _r, 0], dtype=complex),  # (|0)|V) + |1)|H)) / sqrt 2
}


def bell_projector(beam: int) -> np.ndarray:
    if beam not in BELL_BEAMS:
        raise ValueError(f"Bell beam index must be 1..4, got {beam!r}")
    return projector(BELL_BEAMS[beam])


@dataclass(frozen=True)
class TripartiteState:
    spin: Spin
    matrix: np.ndarray

    @property
    def oam_dim(self) -> int:
        return self.spin.dim


@dataclass(frozen=True)
class MeasurementOutcome:
    weight: float
    post_state: np.ndarray


def build_channel(alpha: float, T) -> np.ndarray:
    """Polarisation-OAM channel ``(1 - alpha sigma^B . T_hat^C) / (2(2T+1))``."""
    lo, hi = werner_bounds(T)
    if not lo - 1e-12 <= alpha <= hi + 1e-12:
        raise OutOfRangeError(f"alpha={alpha} outside [{lo:.6g}, 1] for T={as_spin(T)}")
    return werner_state(alpha, T)


def prepare(p, alpha: float, T) -> TripartiteState:
    """``J^A (x) J^BC`` for a path beam with Bloch vector ``p``."""
    spin = as_spin(T)
    return TripartiteState(spin, np.kron(pauli_state(p), build_channel(alpha, spin)))


def bell_project(state: TripartiteState, beam: int) -> MeasurementOutcome:
    """Project A(x)B onto a Bell beam; return the intensity fraction and the OAM matrix."""
    d = state.oam_dim
    J = state.matrix.reshape(4, d, 4, d)
    P = bell_projector(beam)
    # Tr_AB[(P (x) 1) J (P (x) 1)] = Tr_AB[(P (x) 1) J] for a projector P
    reduced = np.einsum("ba,aibj->ij", P, J)
    weight = float(np.trace(reduced).real)
    if weight < 1e-14:
        raise ZeroWeightError(f"Bell beam {beam} carries no intensity")
    return MeasurementOutcome(weight, reduced / weight)


def correction(beam: int, T) -> np.ndarray:
    """OAM unitary applied after measuring ``beam``: identity, then ``R_1(pi), R_2(pi), R_3(pi)``.

    ``R_n(pi) = exp(+i T . n pi)``.
    """
    spin = as_spin(T)
    if beam == 1:
        return np.eye(spin.dim, dtype=complex)
    if beam not in BELL_BEAMS:
        raise ValueError(f"Bell beam index must be 1..4, got {beam!r}")
    axis = np.eye(3)[beam - 2]
    return wigner_rotation(spin, axis, np.pi, sign=1)


def run_protocol(p, alpha: float, T, beam: int = 1) -> np.ndarray:
    """Corrected OAM matrix; equals ``(1 + alpha T_hat . p) / (2T+1)`` for every beam."""
    outcome = bell_project(prepare(p, alpha, T), beam)
    U = correction(beam, T)
    return U @ outcome.post_state @ U.conj().T


def expected_output(p, alpha: float, T) -> np.ndarray:
    spin = as_spin(T)
    frame = make_generators(spin)
    return (np.eye(spin.dim) + alpha / frame.T * frame.dot(p)) / spin.dim


def retrieve_bloch(J, alpha: float, T) -> np.ndarray:
    """``p_i = Tr[J O_i] / alpha`` with ``O_i`` the equivalent observable of ``sigma_i``."""
    if alpha == 0:
        raise SingularityError("alpha = 0: no information can be retrieved")
    J = np.asarray(J, dtype=complex)
    return np.array([np.trace(J @ equivalent_observable(e, T)[0]).real for e in np.eye(3)]) / alpha


def protocol_record(p, alpha: float, T, beam: int) -> dict:
    """JSON-ready summary of one protocol run."""
    spin = as_spin(T)
    p = np.asarray(p, dtype=float)
    outcome = bell_project(prepare(p, alpha, spin), beam)
    U = correction(beam, spin)
    out = U @ outcome.post_state @ U.conj().T
    record = {"p_in": p.tolist(), "alpha": alpha, "T": str(spin), "beam": beam, "weight": outcome.weight}
    try:
        p_out = retrieve_bloch(out, alpha, spin)
    except SingularityError:
        record.update(p_out=None, roundtrip_error=None, error="singularity")
    else:
        record.update(p_out=p_out.tolist(), roundtrip_error=float(np.linalg.norm(p_out - p)))
    return record


__all__ = [
    "BELL_BEAMS",
    "PAULI",
    "MeasurementOutcome",
    "TripartiteState",
    "bell_project",
    "bell_projector",
    "build_channel",
    "correction",
    "expected_output",
    "prepare",
    "protocol_record",
    "retrieve_bloch",
    "run_protocol",
]
