"""Command-line front end.

Subcommands: ``render``, ``idiff``, ``werner``, ``protocol`` and ``classify``.
Every subcommand accepts ``--out DIR``, ``--seed INT`` and ``--config FILE``.
The JSON config maps option names (``learning_rate`` or ``learning-rate``) to
values and overrides the command-line flags.  On failure the exit status is
non-zero and a JSON object ``{"error": ..., "message": ...}`` goes to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import io
from .classifier import ClassifierModel, TrainConfig, accuracy, confusion_matrix, make_blobs, train
from .equivalence import mixedness, ppt_min_eig, werner_bounds, werner_separable, werner_state, werner_t_min
from .errors import EquivBeamsError, UnboundedError
from .optics import Grid, coherent_beam_intensity, i_diff
from .protocol import protocol_record
from .su import Spin, as_spin


class CLIError(Exception):
    def __init__(self, code, message, status=2):
        super().__init__(message)
        self.code = code
        self.status = status


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CLIError("usage", f"{self.prog}: {message}")


def _spin(text) -> Spin:
    try:
        return as_spin(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _common(parser):
    parser.add_argument("--out", default=".", help="output directory (created if missing)")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--config", help="JSON file whose keys override the flags")


def _grid_flags(parser):
    parser.add_argument("--extent", type=float, default=3.0, help="half-width of the grid in waist units")
    parser.add_argument("--resolution", type=int, default=512, help="pixels per side")
    parser.add_argument("--waist", type=float, default=1.0)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="equivbeams", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("render", help="intensity of an SU(2) coherent OAM beam")
    p.add_argument("--T", type=_spin, default=Spin(2))
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--phi", type=float, default=0.0)
    _grid_flags(p)
    _common(p)

    p = sub.add_parser("idiff", help="I_diff maps and their peak-scale table")
    p.add_argument("--alpha", type=float, nargs="+", default=[0.2, 0.4, 0.9])
    p.add_argument("--theta", type=float, nargs="+", default=[k * np.pi / 4 for k in range(5)])
    _grid_flags(p)
    _common(p)

    p = sub.add_parser("werner", help="separability table of qubit (x) spin-T Werner beams")
    p.add_argument("--alpha", type=float, nargs="+", default=[0.0, 0.2, 1 / 3, 0.5, 0.6, 0.75, 0.9, 1.0])
    p.add_argument("--T", type=_spin, nargs="+", default=[Spin(1), Spin(2), Spin(3), Spin(4)])
    _common(p)

    p = sub.add_parser("protocol", help="path -> OAM transfer through a Werner channel")
    p.add_argument("--p", type=float, nargs=3, required=True, metavar=("P1", "P2", "P3"))
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--T", type=_spin, default=Spin(2))
    group = p.add_mutually_exclusive_group()
    group.add_argument("--beam", type=int, choices=[1, 2, 3, 4], default=1)
    group.add_argument("--all-beams", action="store_true")
    _common(p)

    p = sub.add_parser("classify", help="train / evaluate the quNit classifier")
    p.add_argument("action", choices=["train", "eval", "blobs"])
    p.add_argument("--data", required=True, help="dataset CSV (f1..fd,label)")
    p.add_argument("--model", default="model.json", help="model JSON (relative to --out)")
    p.add_argument("--N", type=int, help="Hilbert-space dimension; must equal the number of classes")
    p.add_argument("--learning-rate", type=float, default=0.1)
    p.add_argument("--epochs", type=int, default=500)
    p.add_argument("--fd-step", type=float, default=1e-5)
    p.add_argument("--n-samples", type=int, default=200, help="blobs only")
    _common(p)
    return parser


def _apply_config(args):
    if not args.config:
        return args
    try:
        with open(args.config) as fh:
            config = json.load(fh)
    except OSError as exc:
        raise CLIError("io", f"{args.config}: {exc.strerror}", 1) from None
    except json.JSONDecodeError as exc:
        raise CLIError("config", f"{args.config}: {exc}") from None
    if not isinstance(config, dict):
        raise CLIError("config", f"{args.config}: top level must be an object")
    for key, value in config.items():
        dest = key.replace("-", "_")
        if dest in ("command", "config") or not hasattr(args, dest):
            raise CLIError("config", f"{args.config}: unknown option {key!r}")
        if dest == "T":
            value = [as_spin(v) for v in value] if isinstance(value, list) else as_spin(value)
        setattr(args, dest, value)
    return args


def _grid(args) -> Grid:
    try:
        return Grid(float(args.extent), int(args.resolution))
    except ValueError as exc:
        raise CLIError("invalid", str(exc)) from None


def _fmt(x) -> str:
    return f"{x:.4g}".replace("-", "m")


def cmd_render(args, out: Path) -> dict:
    grid = _grid(args)
    image = coherent_beam_intensity(args.T, args.theta, args.phi, grid, args.waist)
    name = f"render_T{str(args.T).replace('/', '_')}_theta{_fmt(args.theta)}_phi{_fmt(args.phi)}.pgm"
    meta = {"T": str(args.T), "theta": args.theta, "phi": args.phi, "waist": args.waist, "grid": grid.to_dict()}
    return io.write_image(out / name, image, meta)


def cmd_idiff(args, out: Path) -> dict:
    for a in args.alpha:
        if not 0 <= a <= 1:
            raise CLIError("out_of_range", f"alpha={a} outside [0, 1]")
    grid = _grid(args)
    rows = []
    for a in args.alpha:
        for th in args.theta:
            image = i_diff(a, th, grid, args.waist)
            name = f"idiff_alpha{_fmt(a)}_theta{_fmt(th)}.pgm"
            meta = {"alpha": a, "theta": th, "waist": args.waist, "grid": grid.to_dict()}
            side = io.write_image(out / name, image, meta)
            rows.append([a, th, float(np.abs(image).max()), side["min"], side["max"], name])
    io.write_csv(out / "idiff_scales.csv", ["alpha", "theta", "peak_abs", "min", "max", "image"], rows)
    return {"images": len(rows), "table": "idiff_scales.csv"}


def cmd_werner(args, out: Path) -> dict:
    for T in args.T:
        if T.twice == 0:
            raise CLIError("out_of_range", "T must be >= 1/2")
        lo, hi = werner_bounds(T)
        for a in args.alpha:
            if not lo - 1e-12 <= a <= hi + 1e-12:
                raise CLIError("out_of_range", f"alpha={a} outside PSD range [{lo:.6g}, 1] for T={T}")
    rows = []
    for a in args.alpha:
        try:
            tmin = str(werner_t_min(a))
        except UnboundedError:
            tmin = "infinite"
        for T in args.T:
            M = werner_state(a, T)
            rows.append([a, str(T), werner_separable(a, T), ppt_min_eig(M, (2, T.dim)), mixedness(M), tmin])
    io.write_csv(out / "werner.csv", ["alpha", "T", "separable", "ppt_min_eig", "mixedness", "t_min"], rows)
    return {"rows": len(rows), "table": "werner.csv"}


def cmd_protocol(args, out: Path) -> dict:
    p = np.asarray(args.p, dtype=float)
    if np.linalg.norm(p) > 1 + 1e-12:
        raise CLIError("out_of_range", f"|p| = {np.linalg.norm(p):.6g} exceeds 1")
    beams = [1, 2, 3, 4] if args.all_beams else [args.beam]
    records = [protocol_record(p, args.alpha, args.T, b) for b in beams]
    io.write_json(out / "protocol.json", records)
    return {"records": records}


def cmd_classify(args, out: Path) -> dict:
    if args.action == "blobs":
        X, y = make_blobs(args.n_samples, args.seed)
        io.write_dataset(args.data, X, y)
        return {"dataset": str(args.data), "n": int(y.size)}
    X, y = io.read_dataset(args.data)
    model_path = out / args.model
    if args.action == "train":
        n_classes = len(np.unique(y))
        N = args.N if args.N is not None else n_classes
        if N != n_classes or y.max() >= N:
            raise CLIError("invalid", f"N={N} but the dataset has {n_classes} classes labelled 0..{y.max()}")
        config = TrainConfig(args.learning_rate, args.epochs, args.fd_step, args.seed)
        model = ClassifierModel.random(N, X.shape[1], seed=args.seed)
        model, history = train(model, X, y, config)
        model.save(model_path)
        io.write_csv(out / "loss_trace.csv", ["epoch", "loss", "accuracy"], history.rows())
        return {"model": str(model_path), "final_loss": history.loss[-1], "accuracy": history.accuracy[-1]}
    try:
        model = ClassifierModel.load(model_path)
    except OSError as exc:
        raise CLIError("io", f"{model_path}: {exc.strerror}", 1) from None
    if X.shape[1] != model.d or y.max() >= model.N:
        raise CLIError("invalid", f"dataset does not match model (d={model.d}, N={model.N})")
    metrics = {
        "accuracy": accuracy(model, X, y),
        "confusion": confusion_matrix(model, X, y).tolist(),
        "n": int(y.size),
    }
    io.write_json(out / "metrics.json", metrics)
    return metrics


COMMANDS = {
    "render": cmd_render,
    "idiff": cmd_idiff,
    "werner": cmd_werner,
    "protocol": cmd_protocol,
    "classify": cmd_classify,
}


def run(argv=None) -> dict:
    """Parse ``argv`` and execute; raises on error."""
    parser = build_parser()
    args = _apply_config(parser.parse_args(argv))
    out = Path(args.out)
    try:
        out.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise CLIError("io", f"{out}: {exc.strerror}", 1) from None
    return COMMANDS[args.command](args, out)


def main(argv=None) -> int:
    try:
        result = run(argv)
    except CLIError as exc:
        print(json.dumps({"error": exc.code, "message": str(exc)}), file=sys.stderr)
        return exc.status
    except EquivBeamsError as exc:
        print(json.dumps({"error": exc.code, "message": str(exc)}), file=sys.stderr)
        return 1
    except OSError as exc:
        print(json.dumps({"error": "io", "message": f"{exc.filename}: {exc.strerror}"}), file=sys.stderr)
        return 1
    print(json.dumps(result, indent=2, default=str))
    return 0


if __name__ == "__main__":
    sys.exit(main())
