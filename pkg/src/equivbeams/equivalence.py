"""Q-representation, equivalent states and observables, Werner families.

Mode matrices (quantum density matrices or classical coherent-mode matrices)
are plain complex ``numpy`` arrays; :func:`check_mode_matrix` validates them.
Bipartite matrices are ordered ``qubit (x) spin-T``, i.e. ``np.kron(A, B)``;
the qubit factor is written in the Pauli basis ``|0), |1)`` where ``sigma_3``
is ``diag(1, -1)``, while spin-T factors use the ascending T3 basis of
:mod:`equivbeams.su`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError, NotPositiveError, OutOfRangeError, UnboundedError, ZeroIntensityError
from .su import Spin, SphereGrid, as_spin, coherent_states, frame_of, make_generators, normalize_axis, sphere_grid

MATRIX_TOL = 1e-10

PAULI = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)

# polarisation kets with |H) -> |0), |V) -> |1)
KET_H = np.array([1, 0], dtype=complex)
KET_V = np.array([0, 1], dtype=complex)
KET_PLUS = (KET_H + KET_V) / np.sqrt(2)
KET_MINUS = (KET_H - KET_V) / np.sqrt(2)
KET_R = (KET_H + 1j * KET_V) / np.sqrt(2)
KET_L = (KET_H - 1j * KET_V) / np.sqrt(2)


def check_mode_matrix(M, tol: float = MATRIX_TOL) -> np.ndarray:
    """Validate Hermiticity, positivity and unit trace; returns ``M`` as a complex array."""
    M = np.asarray(M, dtype=complex)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise DimensionMismatchError(f"mode matrix must be square, got shape {M.shape}")
    if np.max(np.abs(M - M.conj().T)) > tol:
        raise NotPositiveError("mode matrix is not Hermitian")
    if abs(np.trace(M) - 1) > tol:
        raise NotPositiveError(f"mode matrix trace is {np.trace(M).real:.12g}, expected 1")
    lmin = np.linalg.eigvalsh(M).min()
    if lmin < -tol:
        raise NotPositiveError(f"mode matrix has negative eigenvalue {lmin:.3e}")
    return M


def projector(v) -> np.ndarray:
    v = np.asarray(v, dtype=complex)
    return np.outer(v, v.conj())


def _unit_T(T):
    """Normalised generators ``T_i / T``."""
    frame = make_generators(T)
    if frame.spin.twice == 0:
        raise OutOfRangeError("T = 0 has no normalised generators")
    return frame, [g / frame.T for g in frame.generators]


def qubit_state(p) -> np.ndarray:
    """``(1 + 2 T_vec . p) / 2`` in the spin-1/2 frame (basis ``m = -1/2, +1/2``).

    This is the reference qubit for Q-function comparisons against
    :func:`equivalent_state`.
    """
    return equivalent_state(p, Spin(1))


def pauli_state(p) -> np.ndarray:
    """``(1 + sigma . p) / 2`` in the ``|0), |1)`` (= ``|H), |V)``) basis."""
    p = np.asarray(p, dtype=float)
    if np.linalg.norm(p) > 1 + 1e-12:
        raise OutOfRangeError(f"|p| = {np.linalg.norm(p):.6g} exceeds 1")
    return (np.eye(2) + sum(pi * s for pi, s in zip(p, PAULI))) / 2


def pauli_coherent_states(theta, phi) -> np.ndarray:
    """Eigenvectors of ``sigma . n`` with eigenvalue +1, in the ``|0), |1)`` basis."""
    # reversing the spin-1/2 basis maps 2*T_vec onto the Pauli vector
    return coherent_states(Spin(1), theta, phi)[..., ::-1]


def equivalent_state(p, T) -> np.ndarray:
    """``(1 + T_hat . p) / (2T+1)`` with ``T_hat = T_vec / T``.

    Shares its Q-function ``(1 + p . n) / 4 pi`` with the qubit state of Bloch vector ``p``.
    """
    p = np.asarray(p, dtype=float)
    if p.shape != (3,):
        raise DimensionMismatchError("Bloch vector must have 3 components")
    if np.linalg.norm(p) > 1 + 1e-12:
        raise OutOfRangeError(f"|p| = {np.linalg.norm(p):.6g} exceeds 1")
    frame, that = _unit_T(T)
    return (np.eye(frame.dim) + sum(pi * t for pi, t in zip(p, that))) / frame.dim


def equivalent_observable(m, T):
    """Equivalent of ``sigma . m``: the operator ``(3T/(T+1)) T_hat . m``.

    Returns ``(operator, projectors)``.  For ``T = 1`` the projectors are the
    eigen-resolution ``(P1, P2, P3)`` onto eigenvalues ``+3/2, -3/2, 0``;
    otherwise ``projectors`` is ``None``.
    """
    m = normalize_axis(m)
    frame = make_generators(T)
    Tm = frame.dot(m)
    op = 3 / (frame.T + 1) * Tm
    projectors = None
    if frame.spin.twice == 2:
        one = np.eye(3)
        projectors = (0.5 * Tm @ (Tm + one), 0.5 * Tm @ (Tm - one), one - Tm @ Tm)
    return op, projectors


@dataclass(frozen=True)
class BipartiteBloch:
    """Local Bloch vectors ``p`` (qubit side), ``q`` (spin side) and correlation tensor ``t``."""

    p: np.ndarray = np.zeros(3)
    q: np.ndarray = np.zeros(3)
    t: np.ndarray = np.zeros((3, 3))


def general_two_dof_state(b: BipartiteBloch, T) -> np.ndarray:
    """``[1 + sigma.p + T_hat.q + t_ij sigma_i T_hat_j] / (2(2T+1))``, validated as PSD."""
    frame, that = _unit_T(T)
    d = frame.dim
    p, q, t = (np.asarray(x, dtype=float) for x in (b.p, b.q, b.t))
    M = np.eye(2 * d, dtype=complex)
    for i in range(3):
        M += p[i] * np.kron(PAULI[i], np.eye(d)) + q[i] * np.kron(np.eye(2), that[i])
        for j in range(3):
            M += t[i, j] * np.kron(PAULI[i], that[j])
    M /= 2 * d
    lmin = np.linalg.eigvalsh(M).min()
    if lmin < -MATRIX_TOL:
        raise NotPositiveError(f"(p, q, t) is unphysical: minimum eigenvalue {lmin:.3e}")
    return M


def werner_bounds(T) -> tuple[float, float]:
    """PSD range ``[-T/(T+1), 1]`` of the Werner parameter."""
    t = as_spin(T).T
    return -t / (t + 1), 1.0


def werner_state(alpha: float, T) -> np.ndarray:
    """``(1 - alpha sigma . T_hat) / (2(2T+1))``."""
    lo, hi = werner_bounds(T)
    if not lo - 1e-12 <= alpha <= hi + 1e-12:
        raise OutOfRangeError(f"alpha={alpha} outside PSD range [{lo:.6g}, 1] for T={as_spin(T)}")
    frame, that = _unit_T(T)
    d = frame.dim
    corr = sum(np.kron(s, t) for s, t in zip(PAULI, that))
    return (np.eye(2 * d) - alpha * corr) / (2 * d)


def werner_separable(alpha: float, T) -> bool:
    """Analytic separability range ``|alpha| <= T/(T+1)``."""
    t = as_spin(T).T
    return abs(alpha) <= t / (t + 1) + 1e-12


def werner_t_min(alpha: float) -> Spin:
    """Smallest half-integer ``T`` with ``T/(T+1) >= |alpha|``."""
    a = abs(alpha)
    if a > 1:
        raise OutOfRangeError(f"|alpha| = {a} > 1")
    if a == 1:
        raise UnboundedError("no finite T: the separable equivalent of a pure Bell state is infinite dimensional")
    twice = int(np.ceil(2 * a / (1 - a) - 1e-9))
    return Spin(max(twice, 1))


def mixedness(M) -> float:
    """``1 - Tr(M^2)``."""
    M = np.asarray(M, dtype=complex)
    return float(1 - np.real(np.trace(M @ M)))


def c_entropy(M) -> float:
    """``-sum lambda log lambda`` (natural log, ``0 log 0 = 0``)."""
    lam = np.linalg.eigvalsh(np.asarray(M, dtype=complex))
    lam = lam[lam > 1e-15]
    return float(-np.sum(lam * np.log(lam)))


def partial_transpose(M, dims=None) -> np.ndarray:
    """Transpose on the second tensor factor.  ``dims`` defaults to ``(2, n/2)``."""
    M = np.asarray(M, dtype=complex)
    n = M.shape[0]
    if dims is None:
        dims = (2, n // 2)
    da, db = dims
    if M.shape != (da * db, da * db):
        raise DimensionMismatchError(f"matrix of shape {M.shape} does not split as {da} x {db}")
    return M.reshape(da, db, da, db).transpose(0, 3, 2, 1).reshape(n, n)


def ppt_min_eig(M, dims=None) -> float:
    """Smallest eigenvalue of the partial transpose.

    Non-negative is sufficient for separability in 2x2 and 2x3 only.
    """
    return float(np.linalg.eigvalsh(partial_transpose(M, dims)).min())


@dataclass(frozen=True)
class SeparableEnsemble:
    """Incoherent mixture ``sum_k w_k |a_k)(a_k| (x) |b_k)(b_k|``."""

    weights: tuple
    left: tuple
    right: tuple

    def __len__(self):
        return len(self.weights)

    def matrix(self) -> np.ndarray:
        return sum(w * np.kron(projector(a), projector(b)) for w, a, b in zip(self.weights, self.left, self.right))


def separable_decomposition_T1() -> SeparableEnsemble:
    """Six-member product ensemble of the polarisation-OAM Werner beam at ``alpha = 1/2``, ``T = 1``.

    OAM kets are in the basis ``(LG_{0,-1}, LG_{00}, LG_{01})``.
    """
    r = 1 / np.sqrt(2)
    psi1 = np.array([0, 0, 1], dtype=complex)
    psi2 = np.array([1, 0, 0], dtype=complex)
    psi3p = np.array([0.5, r, 0.5], dtype=complex)
    psi3m = np.array([0.5, -r, 0.5], dtype=complex)
    psi4p = np.array([0.5, 1j * r, -0.5], dtype=complex)
    psi4m = np.array([0.5, -1j * r, -0.5], dtype=complex)
    left = (KET_V, KET_H, KET_MINUS, KET_PLUS, KET_R, KET_L)
    right = (psi1, psi2, psi3p, psi3m, psi4p, psi4m)
    return SeparableEnsemble((1 / 6,) * 6, left, right)


def polarization_matrix_from_samples(Ex, Ey) -> np.ndarray:
    """Time-averaged ``J_ij = <E_i^* E_j> / I`` from field samples."""
    Ex = np.atleast_1d(np.asarray(Ex, dtype=complex))
    Ey = np.atleast_1d(np.asarray(Ey, dtype=complex))
    if Ex.shape != Ey.shape or Ex.ndim != 1 or Ex.size == 0:
        raise DimensionMismatchError("Ex and Ey must be non-empty series of equal length")
    E = np.stack([Ex, Ey])
    J = (E.conj() @ E.T) / Ex.size
    intensity = np.trace(J).real
    if intensity <= 0:
        raise ZeroIntensityError("field has zero total intensity")
    return J / intensity


def degree_of_polarization(J) -> float:
    """``sqrt(1 - 4 det J)`` for a 2x2 unit-trace matrix."""
    det = np.linalg.det(np.asarray(J, dtype=complex)).real
    return float(np.sqrt(max(0.0, 1 - 4 * det)))


@dataclass(frozen=True)
class QFunctionGrid:
    """Q-function values on a sphere quadrature grid (density per steradian)."""

    grid: SphereGrid
    values: np.ndarray

    def integral(self) -> float:
        return float(np.sum(self.grid.weights * self.values))


def q_values(M, frame, theta, phi) -> np.ndarray:
    """``(2T+1)/(4 pi) <n|M|n>`` at arbitrary angle arrays."""
    frame = frame_of(frame)
    M = np.asarray(M, dtype=complex)
    if M.shape != (frame.dim, frame.dim):
        raise DimensionMismatchError(f"matrix dim {M.shape[0]} does not match spin dim {frame.dim}")
    states = coherent_states(frame, theta, phi)
    expect = np.einsum("...i,ij,...j->...", states.conj(), M, states).real
    return frame.dim / (4 * np.pi) * expect


def q_function(M, frame, grid: SphereGrid | int | None = None) -> QFunctionGrid:
    """Husimi Q-function on a sphere grid (or quadrature order)."""
    frame = frame_of(frame)
    if grid is None:
        grid = frame.dim + 1
    if isinstance(grid, (int, np.integer)):
        grid = sphere_grid(int(grid))
    return QFunctionGrid(grid, q_values(M, frame, grid.theta, grid.phi))


def bipartite_q_values(M, T, m_dirs, n_dirs) -> np.ndarray:
    """``F(m, n)`` for a ``qubit (x) spin-T`` matrix on all pairs of directions.

    ``m_dirs`` and ``n_dirs`` are ``(theta, phi)`` array pairs; returns an array
    of shape ``m_theta.shape + n_theta.shape``.
    """
    frame = make_generators(T)
    d = frame.dim
    a = pauli_coherent_states(*m_dirs)
    b = coherent_states(frame, *n_dirs)
    M4 = np.asarray(M, dtype=complex).reshape(2, d, 2, d)
    am = a.reshape(-1, 2)
    bm = b.reshape(-1, d)
    expect = np.einsum("xi,yj,ijkl,xk,yl->xy", am.conj(), bm.conj(), M4, am, bm).real
    shape = np.shape(m_dirs[0]) + np.shape(n_dirs[0])
    return (2 / (4 * np.pi)) * (d / (4 * np.pi)) * expect.reshape(shape)


def equivalence_check(M1, T1, M2, T2, tol: float = 1e-9) -> bool:
    """True iff the two Q-functions agree pointwise on a common grid."""
    s1, s2 = as_spin(T1), as_spin(T2)
    order = max(s1.twice, s2.twice) + 2
    grid = sphere_grid(order)
    q1 = q_values(M1, s1, grid.theta, grid.phi)
    q2 = q_values(M2, s2, grid.theta, grid.phi)
    return bool(np.max(np.abs(q1 - q2)) <= tol)
