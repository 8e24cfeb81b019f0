"""Single-quNit variational classifier.

A sample ``x`` is encoded as ``exp(i S3 (w . x)) H |0>``.  It is then rotated by
an SU(N) unitary in generalised Euler form and read out in the computational
basis, one outcome per class.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import EmptyBatchError, LengthMismatchError
from .su import herm_exp

PROB_FLOOR = 1e-12


@lru_cache(maxsize=16)
def _gell_mann(N: int):
    mats = []
    for k in range(1, N):
        for j in range(k):
            sym = np.zeros((N, N), dtype=complex)
            sym[j, k] = sym[k, j] = 1
            anti = np.zeros((N, N), dtype=complex)
            anti[j, k], anti[k, j] = -1j, 1j
            mats += [sym, anti]
        diag = np.zeros(N)
        diag[:k] = 1
        diag[k] = -k
        mats.append(np.diag(np.sqrt(2 / (k * (k + 1))) * diag).astype(complex))
    return tuple(mats)


def gell_mann_basis(N: int) -> list[np.ndarray]:
    """Generalised Gell-Mann matrices, normalised to ``Tr(l_a l_b) = 2 delta_ab``.

    Ordered as in SU(3): for each level ``k`` the symmetric/antisymmetric pairs
    ``(j, k)``, ``j < k``, followed by the ``k``-th diagonal generator.  For
    ``N = 2`` this gives the Pauli matrices in order.
    """
    if N < 2:
        raise ValueError("N must be >= 2")
    return [m.copy() for m in _gell_mann(N)]


def hadamard_general(N: int) -> np.ndarray:
    """N-point DFT unitary ``omega^{jk} / sqrt(N)``; the Hadamard gate for ``N = 2``."""
    if N < 2:
        raise ValueError("N must be >= 2")
    j = np.arange(N)
    return np.exp(2j * np.pi * np.outer(j, j) / N) / np.sqrt(N)


def spin_diag(N: int) -> np.ndarray:
    """Diagonal of ``S3 = diag(-(N-1)/2, ..., (N-1)/2)``."""
    return np.arange(N) - (N - 1) / 2


def encode(x, w, N: int) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    w = np.asarray(w, dtype=float)
    if x.shape != w.shape:
        raise LengthMismatchError(f"x has {x.size} features, w has {w.size}")
    return encode_batch(x[None, :], w, N)[0]


def encode_batch(X, w, N: int) -> np.ndarray:
    """Encoded states for each row of ``X``; shape ``(n, N)``."""
    X = np.atleast_2d(np.asarray(X, dtype=float))
    w = np.asarray(w, dtype=float)
    if X.shape[1] != w.size:
        raise LengthMismatchError(f"X has {X.shape[1]} features, w has {w.size}")
    phase = X @ w
    # H|0> is the first column of the DFT matrix: all amplitudes 1/sqrt(N)
    return np.exp(1j * np.outer(phase, spin_diag(N))) / np.sqrt(N)


def build_unitary(angles, N: int) -> np.ndarray:
    """``prod_j exp(i l_j a_j)`` over the Gell-Mann generators, left to right."""
    angles = np.asarray(angles, dtype=float)
    if angles.size != N * N - 1:
        raise LengthMismatchError(f"SU({N}) needs {N * N - 1} angles, got {angles.size}")
    U = np.eye(N, dtype=complex)
    for lam, a in zip(_gell_mann(N), angles):
        if a != 0:
            U = U @ herm_exp(lam, a)
    return U


@dataclass
class ClassifierModel:
    N: int
    d: int
    w: np.ndarray
    angles: np.ndarray

    def __post_init__(self):
        if self.N < 2:
            raise ValueError("N must be >= 2")
        self.w = np.asarray(self.w, dtype=float)
        self.angles = np.asarray(self.angles, dtype=float)
        if self.w.size != self.d:
            raise LengthMismatchError(f"w has {self.w.size} entries, expected d={self.d}")
        if self.angles.size != self.N**2 - 1:
            raise LengthMismatchError(f"angles has {self.angles.size} entries, expected {self.N**2 - 1}")

    @property
    def n_params(self) -> int:
        return self.d + self.N**2 - 1

    @property
    def params(self) -> np.ndarray:
        return np.concatenate([self.w, self.angles])

    def with_params(self, theta) -> "ClassifierModel":
        theta = np.asarray(theta, dtype=float)
        return ClassifierModel(self.N, self.d, theta[: self.d].copy(), theta[self.d :].copy())

    @classmethod
    def identity(cls, N: int, d: int) -> "ClassifierModel":
        return cls(N, d, np.zeros(d), np.zeros(N * N - 1))

    @classmethod
    def random(cls, N: int, d: int, seed: int = 0, scale: float = 0.1) -> "ClassifierModel":
        rng = np.random.default_rng(seed)
        return cls(N, d, scale * rng.standard_normal(d), scale * rng.standard_normal(N * N - 1))

    def to_dict(self) -> dict:
        return {"N": self.N, "d": self.d, "w": self.w.tolist(), "angles": self.angles.tolist()}

    @classmethod
    def from_dict(cls, data: dict) -> "ClassifierModel":
        return cls(int(data["N"]), int(data["d"]), data["w"], data["angles"])

    def save(self, path):
        with open(path, "w") as fh:
            json.dump(self.to_dict(), fh, indent=2)
            fh.write("\n")

    @classmethod
    def load(cls, path) -> "ClassifierModel":
        with open(path) as fh:
            return cls.from_dict(json.load(fh))


@dataclass(frozen=True)
class Prediction:
    probabilities: np.ndarray
    label: int


def predict_proba(model: ClassifierModel, X) -> np.ndarray:
    """Outcome probabilities ``|<a|U|psi(x)>|^2``, shape ``(n, N)``."""
    states = encode_batch(X, model.w, model.N)
    U = build_unitary(model.angles, model.N)
    return np.abs(states @ U.T) ** 2


def decide(probabilities) -> int:
    """Most likely outcome; ``np.argmax`` resolves ties to the lowest index."""
    return int(np.argmax(probabilities))


def predict(model: ClassifierModel, x) -> Prediction:
    x = np.asarray(x, dtype=float)
    if x.size != model.d:
        raise LengthMismatchError(f"x has {x.size} features, model expects {model.d}")
    probs = predict_proba(model, x[None, :])[0]
    return Prediction(probs, decide(probs))


def predict_labels(model: ClassifierModel, X) -> np.ndarray:
    return np.argmax(predict_proba(model, X), axis=1)


def accuracy(model: ClassifierModel, X, y) -> float:
    return float(np.mean(predict_labels(model, X) == np.asarray(y)))


def confusion_matrix(model: ClassifierModel, X, y) -> np.ndarray:
    """``C[true, predicted]`` counts."""
    C = np.zeros((model.N, model.N), dtype=int)
    np.add.at(C, (np.asarray(y, dtype=int), predict_labels(model, X)), 1)
    return C


def loss(model: ClassifierModel, X, y) -> float:
    """Mean negative log-likelihood of the true labels."""
    y = np.asarray(y, dtype=int)
    if y.size == 0:
        raise EmptyBatchError("loss of an empty batch")
    probs = predict_proba(model, X)
    return float(-np.mean(np.log(np.maximum(probs[np.arange(y.size), y], PROB_FLOOR))))


def grad_fd(model: ClassifierModel, X, y, step: float = 1e-5) -> np.ndarray:
    """Central-difference gradient over ``(w, angles)``."""
    theta = model.params
    g = np.empty_like(theta)
    for k in range(theta.size):
        e = np.zeros_like(theta)
        e[k] = step
        g[k] = (loss(model.with_params(theta + e), X, y) - loss(model.with_params(theta - e), X, y)) / (2 * step)
    return g


def grad_forward(model: ClassifierModel, X, y, step: float = 1e-7) -> np.ndarray:
    """Forward-difference gradient (independent check on :func:`grad_fd`)."""
    theta = model.params
    base = loss(model, X, y)
    g = np.empty_like(theta)
    for k in range(theta.size):
        e = np.zeros_like(theta)
        e[k] = step
        g[k] = (loss(model.with_params(theta + e), X, y) - base) / step
    return g


@dataclass
class TrainConfig:
    learning_rate: float = 0.1
    epochs: int = 500
    fd_step: float = 1e-5
    seed: int = 0
    tol: float = 0.0  # stop when |delta loss| < tol; 0 runs every epoch

    def __post_init__(self):
        if self.learning_rate < 0:
            raise ValueError("learning rate must be >= 0")
        if self.epochs < 0:
            raise ValueError("epochs must be >= 0")
        if self.fd_step <= 0:
            raise ValueError("finite-difference step must be > 0")


@dataclass
class TrainHistory:
    epoch: list = field(default_factory=list)
    loss: list = field(default_factory=list)
    accuracy: list = field(default_factory=list)

    def append(self, epoch, loss_value, acc):
        self.epoch.append(epoch)
        self.loss.append(loss_value)
        self.accuracy.append(acc)

    def rows(self):
        return list(zip(self.epoch, self.loss, self.accuracy))


def train(model: ClassifierModel, X, y, config: TrainConfig | None = None):
    """Full-batch gradient descent on the NLL loss.

    Returns ``(trained_model, history)``; ``history`` holds the loss and
    accuracy before the first update (epoch 0) and after every update.
    """
    config = config or TrainConfig()
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=int)
    if y.size == 0:
        raise EmptyBatchError("cannot train on an empty dataset")
    if y.max() >= model.N or y.min() < 0:
        raise ValueError(f"labels must lie in [0, {model.N})")
    history = TrainHistory()
    current = model.with_params(model.params)
    prev = loss(current, X, y)
    history.append(0, prev, accuracy(current, X, y))
    for epoch in range(1, config.epochs + 1):
        g = grad_fd(current, X, y, config.fd_step)
        current = current.with_params(current.params - config.learning_rate * g)
        value = loss(current, X, y)
        history.append(epoch, value, accuracy(current, X, y))
        if config.tol > 0 and abs(prev - value) < config.tol:
            break
        prev = value
    return current, history


def make_blobs(n: int = 200, seed: int = 7, centers=((-1.0, -1.0), (1.0, 1.0)), spread: float = 0.5):
    """Two isotropic Gaussian blobs with equal class sizes; returns ``(X, y)``."""
    rng = np.random.default_rng(seed)
    centers = np.asarray(centers, dtype=float)
    y = np.arange(n) % len(centers)
    X = centers[y] + spread * rng.standard_normal((n, centers.shape[1]))
    return X, y


def map_multiqubit_index(bits) -> int:
    """``|i_{n-1} ... i_1 i_0> -> |sum_k i_k 2^k>`` (big-endian bit list)."""
    bits = list(bits)
    if not bits:
        raise ValueError("bit list must be non-empty")
    value = 0
    for b in bits:
        if b not in (0, 1):
            raise ValueError(f"bits must be 0 or 1, got {b!r}")
        value = 2 * value + int(b)
    return value


def multiqubit_to_qudit(state) -> np.ndarray:
    """Re-index an ``n``-qubit amplitude tensor of shape ``(2,)*n`` as one ``2^n`` qudit vector."""
    state = np.asarray(state, dtype=complex)
    if any(s != 2 for s in state.shape):
        raise LengthMismatchError(f"expected a (2, ..., 2) tensor, got shape {state.shape}")
    out = np.zeros(state.size, dtype=complex)
    for idx in np.ndindex(state.shape):
        out[map_multiqubit_index(idx)] = state[idx]
    return out
