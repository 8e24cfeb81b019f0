"""Equivalent states and Werner beams across dimensions.

A qubit state and its spin-T equivalent share one Q-function, while the
two-dof Werner family becomes separable for large enough T.
"""

import numpy as np

from equivbeams.equivalence import (
    equivalent_observable,
    equivalent_state,
    mixedness,
    ppt_min_eig,
    q_values,
    qubit_state,
    separable_decomposition_T1,
    werner_separable,
    werner_state,
    werner_t_min,
)
from equivbeams.su import Spin

p = np.array([0.2, -0.5, 0.6])
theta = np.linspace(0, np.pi, 7)
phi = np.full_like(theta, 0.3)
q_ref = q_values(qubit_state(p), Spin(1), theta, phi)
for twice in (1, 2, 3, 4):
    T = Spin(twice)
    rho = equivalent_state(p, T)
    dq = np.max(np.abs(q_values(rho, T, theta, phi) - q_ref))
    print(f"T={T}: max |Q - Q_qubit| = {dq:.1e}, mixedness {mixedness(rho):.4f}")

# measuring the equivalent observable gives back p.m in any dimension
m = np.array([0, 0, 1.0])
for T in (0.5, 1, 2):
    op, _ = equivalent_observable(m, T)
    print(f"T={T}: Tr(rho O) = {np.trace(equivalent_state(p, T) @ op).real:.6f}  (p.m = {p @ m})")

print("\nalpha  T    separable  ppt_min_eig")
for alpha in (0.2, 0.5, 0.75):
    for T in (Spin(1), Spin(2), Spin(4)):
        M = werner_state(alpha, T)
        print(f"{alpha:<6} {str(T):<4} {werner_separable(alpha, T)!s:<10} {ppt_min_eig(M, (2, T.dim)):+.4f}")
    print(f"       smallest separable T: {werner_t_min(alpha)}")

ens = separable_decomposition_T1()
err = np.linalg.norm(ens.matrix() - werner_state(0.5, 1))
print(f"\nsix-term product expansion of the alpha=1/2, T=1 beam: error {err:.1e}")
