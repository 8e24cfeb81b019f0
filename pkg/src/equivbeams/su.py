"""SU(2) machinery: spin labels, generators, coherent states and rotations.

Basis convention: index ``k = 0 .. 2T`` carries the T3 eigenvalue ``m = k - T``,
so the highest-weight vector ``|T3 = +T>`` is the last basis vector.  For
``T = 1`` this is the ordering ``(LG_{0,-1}, LG_{00}, LG_{01})``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import NotHermitianError

HERMITIAN_TOL = 1e-10


@dataclass(frozen=True, order=True)
class Spin:
    """A half-integer spin label stored as the integer ``2T``."""

    twice: int

    def __post_init__(self):
        if not isinstance(self.twice, (int, np.integer)) or self.twice < 0:
            raise ValueError(f"2T must be a non-negative integer, got {self.twice!r}")
        object.__setattr__(self, "twice", int(self.twice))

    @classmethod
    def of(cls, value) -> "Spin":
        """Build from ``Spin``, a number (0.5, 1, 1.5, ...), a Fraction or a string like ``"3/2"``."""
        if isinstance(value, Spin):
            return value
        exact = Fraction(value.strip()) if isinstance(value, str) else value
        twice = 2 * Fraction(float(exact)).limit_denominator(1000)
        if twice.denominator != 1 or abs(float(twice) - 2 * float(exact)) > 1e-9:
            raise ValueError(f"{value!r} is not a half-integer")
        return cls(int(twice))

    @property
    def T(self) -> float:
        return self.twice / 2

    @property
    def dim(self) -> int:
        return self.twice + 1

    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def __str__(self):
        return str(self.twice // 2) if self.is_integer else f"{self.twice}/2"


def as_spin(value) -> Spin:
    return Spin.of(value)


@dataclass(frozen=True, eq=False)
class SU2Frame:
    """Generator triple ``(T1, T2, T3)`` of the ``(2T+1)``-dimensional irrep."""

    spin: Spin
    T1: np.ndarray
    T2: np.ndarray
    T3: np.ndarray

    @property
    def dim(self) -> int:
        return self.spin.dim

    @property
    def T(self) -> float:
        return self.spin.T

    @property
    def generators(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        return self.T1, self.T2, self.T3

    def dot(self, n) -> np.ndarray:
        """``T . n`` for a 3-vector ``n``."""
        n = np.asarray(n, dtype=float)
        return n[0] * self.T1 + n[1] * self.T2 + n[2] * self.T3

    def highest_weight(self) -> np.ndarray:
        v = np.zeros(self.dim, dtype=complex)
        v[-1] = 1.0
        return v


@lru_cache(maxsize=64)
def _generators(twice: int):
    T = twice / 2
    m = np.arange(twice + 1) - T
    # <m+1| T+ |m> = sqrt(T(T+1) - m(m+1))
    raising = np.diag(np.sqrt(T * (T + 1) - m[:-1] * (m[:-1] + 1)), k=-1).astype(complex)
    lowering = raising.conj().T
    T1 = (raising + lowering) / 2
    T2 = (raising - lowering) / 2j
    T3 = np.diag(m).astype(complex)
    for a in (T1, T2, T3):
        a.setflags(write=False)
    return T1, T2, T3


def make_generators(T) -> SU2Frame:
    """Angular-momentum matrices in the T3 eigenbasis, eigenvalues ascending."""
    spin = as_spin(T)
    return SU2Frame(spin, *_generators(spin.twice))


def frame_of(frame_or_spin) -> SU2Frame:
    if isinstance(frame_or_spin, SU2Frame):
        return frame_or_spin
    return make_generators(frame_or_spin)


def unit_vector(theta: float, phi: float) -> np.ndarray:
    """Cartesian unit vector for polar angle ``theta`` and azimuth ``phi``."""
    return np.array([np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), np.cos(theta)])


def normalize_axis(n) -> np.ndarray:
    n = np.asarray(n, dtype=float)
    norm = np.linalg.norm(n)
    if n.shape != (3,) or norm == 0:
        raise ValueError(f"axis must be a non-zero 3-vector, got {n!r}")
    return n / norm


def herm_exp(H, scale=1.0, tol: float = HERMITIAN_TOL) -> np.ndarray:
    """``exp(i * scale * H)`` for Hermitian ``H`` via eigendecomposition."""
    H = np.asarray(H, dtype=complex)
    residual = np.max(np.abs(H - H.conj().T)) if H.size else 0.0
    if residual > tol:
        raise NotHermitianError(f"matrix is not Hermitian (residual {residual:.3e})")
    evals, evecs = np.linalg.eigh((H + H.conj().T) / 2)
    return (evecs * np.exp(1j * scale * evals)) @ evecs.conj().T


def wigner_rotation(frame, axis, angle: float, sign: int = 1) -> np.ndarray:
    """``exp(sign * i * (T . n) * angle)``.

    ``sign=-1`` is the active rotation used to build coherent states;
    ``sign=+1`` is the convention of the OAM correction step.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    frame = frame_of(frame)
    return herm_exp(frame.dot(normalize_axis(axis)), sign * angle)


@lru_cache(maxsize=64)
def _t2_eig(twice: int):
    return np.linalg.eigh(_generators(twice)[1])


def coherent_states(frame, theta, phi, psi=0.0) -> np.ndarray:
    """Vectorized coherent states; returns shape ``theta.shape + (dim,)``.

    Evaluates ``exp(-i T3 phi) exp(-i T2 theta) exp(-i T3 psi) |T3=+T>``.
    """
    frame = frame_of(frame)
    theta, phi, psi = np.broadcast_arrays(
        np.asarray(theta, dtype=float), np.asarray(phi, dtype=float), np.asarray(psi, dtype=float)
    )
    m = np.diag(frame.T3).real
    T = frame.T
    evals, evecs = _t2_eig(frame.spin.twice)
    # exp(-i T2 theta) applied to the last basis vector
    top = evecs.conj().T[:, -1]
    rotated = np.einsum("ij,...j->...i", evecs, np.exp(-1j * theta[..., None] * evals) * top)
    return rotated * np.exp(-1j * m * phi[..., None]) * np.exp(-1j * T * psi[..., None])


def coherent_state(frame, theta: float, phi: float, psi: float = 0.0) -> np.ndarray:
    """SU(2) coherent state ``|n(theta, phi)>``; ``psi`` only contributes a global phase."""
    return coherent_states(frame, theta, phi, psi)


@dataclass(frozen=True)
class SphereGrid:
    """Product quadrature on the unit sphere: Gauss-Legendre in cos(theta), uniform in phi.

    ``weights`` sum to 4*pi.
    """

    theta: np.ndarray
    phi: np.ndarray
    weights: np.ndarray

    @property
    def shape(self):
        return self.weights.shape

    def directions(self) -> np.ndarray:
        return np.stack(
            [np.sin(self.theta) * np.cos(self.phi), np.sin(self.theta) * np.sin(self.phi), np.cos(self.theta)],
            axis=-1,
        )


def sphere_grid(order: int, n_phi: int | None = None) -> SphereGrid:
    """Quadrature exact for polynomials of degree ``2*order - 1`` on the sphere."""
    if order < 1:
        raise ValueError("quadrature order must be >= 1")
    n_phi = 2 * order if n_phi is None else n_phi
    x, wx = np.polynomial.legendre.leggauss(order)
    phi = 2 * np.pi * np.arange(n_phi) / n_phi
    theta = np.arccos(x)
    TH, PH = np.meshgrid(theta, phi, indexing="ij")
    W = np.outer(wx, np.full(n_phi, 2 * np.pi / n_phi))
    return SphereGrid(TH, PH, W)


def resolution_of_identity_residual(frame, quadrature_order: int) -> float:
    """Frobenius norm of ``(2T+1)/(4 pi) * int |n><n| dOmega - 1``."""
    frame = frame_of(frame)
    grid = sphere_grid(quadrature_order)
    states = coherent_states(frame, grid.theta, grid.phi).reshape(-1, frame.dim)
    w = grid.weights.ravel()
    integral = np.einsum("k,ki,kj->ij", w, states, states.conj())
    return float(np.linalg.norm(frame.dim / (4 * np.pi) * integral - np.eye(frame.dim)))
