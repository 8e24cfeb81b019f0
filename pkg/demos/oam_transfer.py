"""Path -> OAM transfer through a polarisation-OAM Werner channel.

Every Bell-beam outcome carries a quarter of the intensity; after the matching
OAM rotation all four outcomes agree and the path Bloch vector is recovered.
"""

import numpy as np

from equivbeams.errors import SingularityError
from equivbeams.protocol import BELL_BEAMS, bell_project, prepare, protocol_record, retrieve_bloch, run_protocol

p = np.array([0.3, 0.4, -0.5])
for T, alpha in ((0.5, 1.0), (1, 0.5), (1.5, 0.2)):
    state = prepare(p, alpha, T)
    outs = [run_protocol(p, alpha, T, b) for b in BELL_BEAMS]
    spread = max(np.linalg.norm(o - outs[0]) for o in outs)
    weights = [bell_project(state, b).weight for b in BELL_BEAMS]
    p_out = retrieve_bloch(outs[0], alpha, T)
    print(f"T={T} alpha={alpha}: weights {np.round(weights, 6)}, spread {spread:.1e}, p_out {np.round(p_out, 6)}")

print(protocol_record(p, 0.5, 1, 3))

try:
    retrieve_bloch(np.eye(3) / 3, 0.0, 1)
except SingularityError as exc:
    print("retrieval refused:", exc)
