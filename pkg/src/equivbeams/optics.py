"""Laguerre-Gauss fields at the waist plane and beam intensity maps.

Lengths are in units of the waist ``w``.  Modes are normalised to unit power,

    u_pl(r, phi) = sqrt(2 p! / (pi (p+|l|)!)) / w * (sqrt(2) r / w)^|l|
                   * L_p^|l|(2 r^2 / w^2) * exp(-r^2 / w^2) * exp(i l phi)

with Gouy and curvature phases dropped (z = 0).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

import numpy as np

from .equivalence import check_mode_matrix
from .errors import DimensionMismatchError, LengthMismatchError, OutOfRangeError
from .su import as_spin, coherent_state


@dataclass(frozen=True)
class LGMode:
    p: int = 0
    l: int = 0
    w: float = 1.0

    def __post_init__(self):
        if self.p < 0:
            raise ValueError("radial index p must be >= 0")
        if self.w <= 0:
            raise ValueError("waist must be positive")


@dataclass(frozen=True)
class Grid:
    """Square transverse grid of ``resolution`` pixels spanning ``[-extent, extent]``.

    Pixel centres are symmetric about the origin, so the origin itself is only
    sampled for odd resolutions.
    """

    extent: float = 3.0
    resolution: int = 512

    def __post_init__(self):
        if self.resolution < 2:
            raise ValueError("grid resolution must be >= 2")
        if self.extent <= 0:
            raise ValueError("grid extent must be positive")

    @property
    def spacing(self) -> float:
        return 2 * self.extent / self.resolution

    @property
    def pixel_area(self) -> float:
        return self.spacing**2

    def axis(self) -> np.ndarray:
        return (np.arange(self.resolution) + 0.5) * self.spacing - self.extent

    def mesh(self):
        """``(x, y)`` arrays indexed ``[row, col]`` with ``y`` along rows."""
        a = self.axis()
        return np.meshgrid(a, a, indexing="xy")

    def polar(self):
        x, y = self.mesh()
        return np.hypot(x, y), np.arctan2(y, x)

    def to_dict(self) -> dict:
        return {"extent": self.extent, "resolution": self.resolution}


def assoc_laguerre(n: int, k: int, x) -> np.ndarray:
    """Generalised Laguerre polynomial ``L_n^k(x)`` by the upward three-term recurrence."""
    x = np.asarray(x, dtype=float)
    prev = np.ones_like(x)
    if n == 0:
        return prev
    cur = 1 + k - x
    for m in range(1, n):
        prev, cur = cur, ((2 * m + 1 + k - x) * cur - (m + k) * prev) / (m + 1)
    return cur


def lg_field(mode: LGMode, grid: Grid) -> np.ndarray:
    """Complex unit-power field of ``mode`` sampled on ``grid``."""
    r, phi = grid.polar()
    p, l, w = mode.p, abs(mode.l), mode.w
    norm = np.sqrt(2 * factorial(p) / (np.pi * factorial(p + l))) / w
    rho = np.sqrt(2) * r / w
    radial = norm * rho**l * assoc_laguerre(p, l, rho**2) * np.exp(-(r**2) / w**2)
    return radial * np.exp(1j * mode.l * phi)


def oam_basis(T, w: float = 1.0) -> list[LGMode]:
    """Modes identified with T3 eigenstates in ascending order.

    Integer ``T`` uses ``LG_{0,l}`` for ``l = -T .. T``; half-integer ``T`` has
    no symmetric OAM ladder and uses ``l = 0 .. 2T`` instead.
    """
    spin = as_spin(T)
    start = -(spin.twice // 2) if spin.is_integer else 0
    return [LGMode(0, start + k, w) for k in range(spin.dim)]


def power(image, grid: Grid) -> float:
    """Plane integral of an intensity image."""
    return float(np.sum(image) * grid.pixel_area)


def inner_product(f, g, grid: Grid) -> complex:
    """``int f^* g dA`` on the grid."""
    return complex(np.sum(np.conj(f) * g) * grid.pixel_area)


def superpose(coefficients, basis, grid: Grid) -> np.ndarray:
    """Coherent superposition ``sum_k c_k u_k``."""
    c = np.asarray(coefficients, dtype=complex)
    if c.ndim != 1 or c.size != len(basis):
        raise LengthMismatchError(f"{c.size} coefficients for {len(basis)} modes")
    if abs(np.linalg.norm(c) - 1) > 1e-9:
        raise OutOfRangeError(f"coefficients have norm {np.linalg.norm(c):.6g}, expected 1")
    field = np.zeros((grid.resolution, grid.resolution), dtype=complex)
    for ck, mode in zip(c, basis):
        if ck != 0:
            field += ck * lg_field(mode, grid)
    return field


def coherent_beam_intensity(T, theta: float, phi: float, grid: Grid | None = None, w: float = 1.0) -> np.ndarray:
    """Intensity of the SU(2) coherent beam ``|n(theta, phi))`` over :func:`oam_basis`."""
    grid = grid or Grid()
    field = superpose(coherent_state(T, theta, phi), oam_basis(T, w), grid)
    return np.abs(field) ** 2


def mixed_beam_intensity(M, basis, grid: Grid | None = None) -> np.ndarray:
    """Incoherent eigen-mixture ``sum_k lambda_k |field of eigenvector k|^2``."""
    grid = grid or Grid()
    M = check_mode_matrix(M)
    if M.shape[0] != len(basis):
        raise DimensionMismatchError(f"matrix dim {M.shape[0]} does not match {len(basis)} modes")
    lam, vecs = np.linalg.eigh(M)
    image = np.zeros((grid.resolution, grid.resolution))
    for k in range(len(lam)):
        if lam[k] > 1e-14:
            image += lam[k] * np.abs(superpose(vecs[:, k], basis, grid)) ** 2
    return image


def spectral_components(M, basis, grid: Grid | None = None):
    """Eigenvalues and the intensity of each eigen-beam, largest weight first."""
    grid = grid or Grid()
    M = check_mode_matrix(M)
    lam, vecs = np.linalg.eigh(M)
    order = np.argsort(lam)[::-1]
    images = [np.abs(superpose(vecs[:, k], basis, grid)) ** 2 for k in order]
    return lam[order], images


def i_diff(alpha: float, theta: float, grid: Grid | None = None, w: float = 1.0) -> np.ndarray:
    """Intensity of the transferred beam minus the fully mixed background.

    The OAM qubit is spanned by ``LG_00`` and ``LG_01``.
    """
    if not 0 <= alpha <= 1:
        raise OutOfRangeError("alpha must lie in [0, 1]")
    grid = grid or Grid()
    u0 = lg_field(LGMode(0, 0, w), grid)
    u1 = lg_field(LGMode(0, 1, w), grid)
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    psi1 = np.abs(c * u0 + s * u1) ** 2
    psi2 = np.abs(-s * u0 + c * u1) ** 2
    # |psi1|^2 + |psi2|^2 equals the background pointwise, leaving only the alpha term
    return alpha / 2 * (psi1 - psi2)
