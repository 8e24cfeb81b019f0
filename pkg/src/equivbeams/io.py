"""File formats: 16-bit PGM images with JSON sidecars, dataset CSV, loss-trace CSV."""

from __future__ import annotations

import csv
import json
from pathlib import Path

import numpy as np

from .errors import DatasetError

PGM_MAXVAL = 65535


def scale_to_uint16(image) -> tuple[np.ndarray, float, float]:
    """Linear map ``[min, max] -> [0, 65535]``; a constant image maps to zeros."""
    image = np.asarray(image, dtype=float)
    lo, hi = float(image.min()), float(image.max())
    if hi > lo:
        scaled = np.rint((image - lo) / (hi - lo) * PGM_MAXVAL)
    else:
        scaled = np.zeros_like(image)
    return scaled.astype(">u2"), lo, hi


def write_pgm(path, image) -> tuple[float, float]:
    """Write a P5 16-bit big-endian PGM.  Row 0 of the file is the top (largest y).

    Returns the ``(min, max)`` used for the linear scaling.
    """
    data, lo, hi = scale_to_uint16(np.flipud(np.asarray(image)))
    h, w = data.shape
    with open(path, "wb") as fh:
        fh.write(f"P5\n{w} {h}\n{PGM_MAXVAL}\n".encode("ascii"))
        fh.write(data.tobytes())
    return lo, hi


def read_pgm(path) -> np.ndarray:
    """Read a file written by :func:`write_pgm`; returns raw counts with the file's row order."""
    raw = Path(path).read_bytes()
    parts = raw.split(b"\n", 3)
    if parts[0] != b"P5":
        raise ValueError(f"{path}: not a binary PGM")
    w, h = map(int, parts[1].split())
    maxval = int(parts[2])
    dtype = ">u2" if maxval > 255 else "u1"
    return np.frombuffer(parts[3], dtype=dtype).reshape(h, w)


def write_json(path, data):
    with open(path, "w") as fh:
        json.dump(data, fh, indent=2, sort_keys=True)
        fh.write("\n")


def write_image(path, image, meta: dict) -> dict:
    """PGM plus ``<stem>.json`` sidecar holding ``min``, ``max`` and ``meta``."""
    path = Path(path)
    lo, hi = write_pgm(path, image)
    sidecar = dict(meta, min=lo, max=hi, pgm=path.name)
    write_json(path.with_suffix(".json"), sidecar)
    return sidecar


def read_dataset(path):
    """Read ``f1..fd,label`` CSV; returns ``(X, y)``.  Errors carry the 1-based line number."""
    path = Path(path)
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows:
        raise DatasetError(f"{path}: empty file")
    header = [h.strip() for h in rows[0]]
    if len(header) < 2 or header[-1] != "label":
        raise DatasetError(f"{path}:1: header must be f1,...,fd,label")
    d = len(header) - 1
    X, y = [], []
    for lineno, row in enumerate(rows[1:], start=2):
        if not row or all(not c.strip() for c in row):
            continue
        if len(row) != d + 1:
            raise DatasetError(f"{path}:{lineno}: expected {d + 1} columns, got {len(row)}")
        try:
            feats = [float(c) for c in row[:d]]
            label = int(row[d])
        except ValueError as exc:
            raise DatasetError(f"{path}:{lineno}: {exc}") from None
        if label < 0:
            raise DatasetError(f"{path}:{lineno}: negative label {label}")
        X.append(feats)
        y.append(label)
    if not y:
        raise DatasetError(f"{path}: no data rows")
    return np.array(X, dtype=float), np.array(y, dtype=int)


def write_dataset(path, X, y):
    X = np.asarray(X, dtype=float)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow([f"f{k + 1}" for k in range(X.shape[1])] + ["label"])
        for row, label in zip(X, y):
            writer.writerow([repr(float(v)) for v in row] + [int(label)])


def write_csv(path, header, rows):
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
