"""Intensity-difference maps for the T = 1/2 transfer.

Prints the peak |I_diff| at theta = 0 for the three alpha values, which should
sit near 0.06, 0.12 and 0.25, and writes the maps as PGM files.
"""

from pathlib import Path

import numpy as np

from equivbeams import io
from equivbeams.optics import Grid, i_diff, power

out = Path("out_idiff")
out.mkdir(exist_ok=True)
grid = Grid(3.0, 512)

for alpha in (0.2, 0.4, 0.9):
    for k in range(5):
        theta = k * np.pi / 4
        image = i_diff(alpha, theta, grid)
        io.write_image(out / f"idiff_a{alpha}_t{k}.pgm", image, {"alpha": alpha, "theta": theta})
        if k == 0:
            print(f"alpha={alpha}: peak |I_diff| {np.abs(image).max():.4f}, plane integral {power(image, grid):.1e}")
