"""Single-quNit classifier on two Gaussian blobs.

Trains the encoder weight and SU(2) Euler angles by full-batch gradient
descent and prints the loss curve every 100 epochs.
"""

import numpy as np

from equivbeams.classifier import (
    ClassifierModel,
    TrainConfig,
    confusion_matrix,
    make_blobs,
    map_multiqubit_index,
    predict,
    train,
)

X, y = make_blobs(200, seed=7)
model = ClassifierModel.random(2, 2, seed=7)
model, history = train(model, X, y, TrainConfig(learning_rate=0.1, epochs=500))

for epoch, loss_value, acc in history.rows()[::100] + [history.rows()[-1]]:
    print(f"epoch {epoch:3d}: loss {loss_value:.4f}, accuracy {acc:.3f}")
print("confusion matrix:\n", confusion_matrix(model, X, y))
print("prediction at (1.2, 0.8):", predict(model, [1.2, 0.8]))

# two qubits are one 4-level system: |i1 i0> -> |2 i1 + i0>
for bits in ((0, 0), (0, 1), (1, 0), (1, 1)):
    print(bits, "->", map_multiqubit_index(bits))
