"""Acceptance criteria, one check per criterion.

Run with ``pytest tests/test_acceptance.py`` (a PASS/FAIL line per criterion is
printed in the terminal summary) or directly as ``python3 tests/test_acceptance.py``.
"""

import time

import numpy as np
import pytest

from equivbeams.classifier import (
    ClassifierModel,
    TrainConfig,
    grad_fd,
    grad_forward,
    make_blobs,
    predict_proba,
    train,
)
from equivbeams.equivalence import (
    c_entropy,
    equivalent_observable,
    equivalent_state,
    mixedness,
    pauli_state,
    ppt_min_eig,
    q_values,
    qubit_state,
    separable_decomposition_T1,
    werner_state,
    werner_t_min,
)
from equivbeams.errors import SingularityError
from equivbeams.optics import Grid, i_diff, power
from equivbeams.protocol import BELL_BEAMS, bell_project, expected_output, prepare, retrieve_bloch, run_protocol
from equivbeams.su import Spin, resolution_of_identity_residual


def random_ball(rng):
    v = rng.normal(size=3)
    return v / np.linalg.norm(v) * rng.uniform() ** (1 / 3)


def random_unit(rng):
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)


def crit_overcompleteness():
    start = time.perf_counter()
    worst = max(resolution_of_identity_residual(Spin(k), k + 2) for k in range(1, 9))
    elapsed = time.perf_counter() - start
    assert worst < 1e-8, f"residual {worst:.2e}"
    assert elapsed < 1.0, f"runtime {elapsed:.2f} s"
    return f"max residual {worst:.1e} for T=1/2..4 in {elapsed * 1e3:.0f} ms"


def crit_equivalence():
    rng = np.random.default_rng(2)
    theta = np.arccos(rng.uniform(-1, 1, 200))
    phi = rng.uniform(0, 2 * np.pi, 200)
    n = np.stack([np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), np.cos(theta)], axis=-1)
    worst = 0.0
    for _ in range(20):
        p = random_ball(rng)
        T = Spin(int(rng.integers(1, 7)))
        q_big = q_values(equivalent_state(p, T), T, theta, phi)
        q_qubit = q_values(qubit_state(p), Spin(1), theta, phi)
        worst = max(worst, np.max(np.abs(q_big - q_qubit)), np.max(np.abs(q_big - (1 + n @ p) / (4 * np.pi))))
    assert worst < 1e-9, f"max |dQ| {worst:.2e}"
    return f"max |dQ| {worst:.1e} over 20 states x 200 directions"


def crit_observable_bridge():
    rng = np.random.default_rng(3)
    worst = 0.0
    for _ in range(100):
        p, m = random_ball(rng), random_unit(rng)
        T = Spin(int(rng.integers(1, 9)))
        value = np.trace(equivalent_state(p, T) @ equivalent_observable(m, T)[0]).real
        worst = max(worst, abs(value - p @ m))
    assert worst < 1e-10, f"max error {worst:.2e}"
    return f"max |Tr(rho O) - p.m| {worst:.1e} over 100 draws"


def ppt_boundary(T):
    twice = Spin.of(T)
    lo, hi = 0.0, 1.0
    while hi - lo > 1e-9:
        mid = (lo + hi) / 2
        if ppt_min_eig(werner_state(mid, twice), (2, twice.dim)) >= 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def crit_separability():
    errors = []
    for T in (0.5, 1.0):
        errors.append(abs(ppt_boundary(T) - T / (T + 1)))
    assert max(errors) < 1e-6, f"boundary errors {errors}"
    tmin = werner_t_min(0.5)
    assert tmin == Spin(2), f"t_min(0.5) = {tmin}"
    return f"PPT boundary error {max(errors):.1e}; t_min(0.5) = {tmin}"


def crit_separable_expansion():
    ens = separable_decomposition_T1()
    err = np.linalg.norm(ens.matrix() - werner_state(0.5, 1))
    assert len(ens) == 6
    assert err < 1e-12, f"Frobenius error {err:.2e}"
    return f"six-member ensemble, Frobenius error {err:.1e}"


def crit_protocol():
    rng = np.random.default_rng(6)
    w_err = dev = 0.0
    for _ in range(50):
        T = Spin(int(rng.integers(1, 5)))
        p = random_ball(rng)
        alpha = rng.uniform(-T.T / (T.T + 1), 1)
        state = prepare(p, alpha, T)
        target = expected_output(p, alpha, T)
        for beam in BELL_BEAMS:
            w_err = max(w_err, abs(bell_project(state, beam).weight - 0.25))
            dev = max(dev, np.linalg.norm(run_protocol(p, alpha, T, beam) - target))
    rt = 0.0
    for alpha in (0.1, 0.2, 1 / 3, 0.5, 1.0):
        for T in (0.5, 1, 1.5):
            for _ in range(5):
                p = random_ball(rng)
                for beam in BELL_BEAMS:
                    rt = max(rt, np.linalg.norm(retrieve_bloch(run_protocol(p, alpha, T, beam), alpha, T) - p))
    assert w_err < 1e-12, f"weight error {w_err:.2e}"
    assert dev < 1e-10, f"outcome spread {dev:.2e}"
    assert rt < 1e-10, f"round trip {rt:.2e}"
    try:
        retrieve_bloch(np.eye(3) / 3, 0.0, 1)
    except SingularityError:
        pass
    else:
        raise AssertionError("alpha = 0 did not raise")
    return f"weight err {w_err:.0e}, outcome spread {dev:.0e}, round trip {rt:.0e}, alpha=0 singular"


CAPTIONS = {0.2: 0.06, 0.4: 0.12, 0.9: 0.25}


def crit_figure_scales():
    grid = Grid(3.0, 512)
    start = time.perf_counter()
    peaks, integrals = {}, []
    for alpha in CAPTIONS:
        for theta in np.arange(5) * np.pi / 4:
            image = i_diff(alpha, theta, grid, 1.0)
            integrals.append(abs(power(image, grid)))
            if theta == 0:
                peaks[alpha] = float(np.abs(image).max())
    elapsed = time.perf_counter() - start
    for alpha, scale in CAPTIONS.items():
        assert abs(peaks[alpha] - scale) <= 0.25 * scale, f"alpha={alpha}: peak {peaks[alpha]:.4f} vs {scale}"
    assert max(integrals) < 1e-3, f"plane integral {max(integrals):.2e}"
    assert elapsed < 10, f"runtime {elapsed:.1f} s"
    text = ", ".join(f"{peaks[a]:.3f}/{s}" for a, s in CAPTIONS.items())
    return f"peaks {text}; max integral {max(integrals):.0e}; {elapsed:.2f} s"


def crit_mixedness():
    for alpha in (0.3, 0.5, 1.0):
        values = [mixedness(werner_state(alpha, Spin(k))) for k in range(1, 9)]
        assert np.all(np.diff(values) > 0), f"alpha={alpha}: {values}"
        assert values[0] >= -1e-12
    return "strictly increasing over T=1/2..4 for alpha in {0.3, 0.5, 1.0}"


def crit_classifier():
    rng = np.random.default_rng(9)
    norm_err = 0.0
    for N in (2, 3, 4):
        model = ClassifierModel.random(N, 2, seed=N, scale=1.0)
        P = predict_proba(model, rng.normal(size=(100, 2)))
        norm_err = max(norm_err, np.max(np.abs(P.sum(axis=1) - 1)))
    assert norm_err < 1e-10, f"normalization {norm_err:.2e}"

    X, y = make_blobs(200, seed=7)
    probe = ClassifierModel.random(2, 2, seed=1, scale=0.5)
    central = grad_fd(probe, X, y)
    rel = np.linalg.norm(central - grad_forward(probe, X, y)) / np.linalg.norm(central)
    assert rel < 1e-3, f"gradient mismatch {rel:.2e}"

    start = time.perf_counter()
    config = TrainConfig(learning_rate=0.1, epochs=500)
    model_a, hist_a = train(ClassifierModel.random(2, 2, seed=7), X, y, config)
    elapsed = time.perf_counter() - start
    model_b, hist_b = train(ClassifierModel.random(2, 2, seed=7), X, y, config)
    assert hist_a.loss == hist_b.loss and np.array_equal(model_a.params, model_b.params), "training not deterministic"
    acc = hist_a.accuracy[-1]
    assert acc >= 0.95, f"train accuracy {acc:.3f}"
    assert elapsed < 60, f"runtime {elapsed:.1f} s"
    return f"norm err {norm_err:.0e}, grad rel {rel:.1e}, accuracy {acc:.3f} in {elapsed:.1f} s, deterministic"


def crit_c_entropy():
    pure = c_entropy(pauli_state([0, 0, 1]))
    unpolarised = c_entropy(pauli_state([0, 0, 0]))
    assert abs(pure) < 1e-12, f"pure state entropy {pure}"
    assert abs(unpolarised - np.log(2)) < 1e-12, f"unpolarised entropy {unpolarised}"
    values = [c_entropy(pauli_state([0, r, 0])) for r in np.arange(1, 10) / 10]
    assert np.all(np.diff(values) < 0), f"not decreasing: {values}"
    return f"pure {abs(pure):.0e}, unpolarised {unpolarised:.6f}, decreasing over |p|=0.1..0.9"


CRITERIA = [
    (1, "overcompleteness", crit_overcompleteness),
    (2, "equivalence", crit_equivalence),
    (3, "observable bridge", crit_observable_bridge),
    (4, "separability", crit_separability),
    (5, "separable expansion", crit_separable_expansion),
    (6, "protocol", crit_protocol),
    (7, "figure scales", crit_figure_scales),
    (8, "mixedness monotonicity", crit_mixedness),
    (9, "classifier", crit_classifier),
    (10, "c-entropy", crit_c_entropy),
]


def evaluate(number, name, check):
    try:
        detail = check()
    except AssertionError as exc:
        return False, f"FAIL criterion {number:2d} ({name}): {exc}"
    return True, f"PASS criterion {number:2d} ({name}): {detail}"


@pytest.mark.parametrize("number, name, check", CRITERIA, ids=[f"c{n:02d}_{name.replace(' ', '_')}" for n, name, _ in CRITERIA])
def test_criterion(number, name, check, record_property):
    ok, line = evaluate(number, name, check)
    record_property("acceptance", line)
    print(line)
    assert ok, line


if __name__ == "__main__":
    import sys

    results = [evaluate(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
