"""Command-line front end.

Subcommands: algebra, noise, spectrum, interferometer, bounds. Every run
that writes data files also writes a JSON manifest next to the first
output; re-running the argv reconstructed from a manifest reproduces the
outputs bitwise (for seeded runs) since all numerics are deterministic.

Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path

import numpy as np

from . import __version__, algebra, bounds, interferometer, noise
from .constants import derive_planck_scale
from .errors import QGeomError

_FLOAT_KEYS = {"hbar", "G", "c"}


def _scale_from_args(args):
    return derive_planck_scale(hbar=args.hbar, G=args.G, c=args.c)


def _fmt(x) -> str:
    # repr of a float is the shortest digit string that round-trips
    return repr(float(x))


def _write_csv(path, header: str, rows) -> None:
    with open(path, "w") as fh:
        fh.write(header + "\n")
        for row in rows:
            fh.write(",".join(_fmt(v) for v in row) + "\n")


def _emit(args, payload: dict) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for key, value in payload.items():
            print(f"{key} {value}")


def write_manifest(command: str, args: argparse.Namespace,
                   output_paths: list[str]) -> str:
    """Serialize the run next to its first output; returns the manifest path."""
    skip = {"json", "func"}
    params = {k: v for k, v in sorted(vars(args).items())
              if k not in skip and k != "command" and v is not None}
    manifest = {
        "command": command,
        "parameters": params,
        "seed": params.get("seed"),
        "tool_version": __version__,
        "output_paths": output_paths,
    }
    path = str(output_paths[0]) + ".manifest.json"
    with open(path, "w") as fh:
        json.dump(manifest, fh, indent=2)
        fh.write("\n")
    return path


def manifest_argv(manifest: dict) -> list[str]:
    """Rebuild the argv of a recorded run (output paths included)."""
    pre: list[str] = []
    post: list[str] = []
    for key, value in manifest["parameters"].items():
        flag = "--" + key.replace("_", "-")
        target = pre if key in _FLOAT_KEYS else post
        if isinstance(value, bool):
            if value:
                target.append(flag)
        else:
            target.extend([flag, repr(value) if isinstance(value, float) else str(value)])
    return pre + [manifest["command"]] + post


def _cmd_algebra(args) -> int:
    scale = _scale_from_args(args)
    rep = algebra.build_representation(args.spin, scale)
    eigvals = np.sort(np.linalg.eigvalsh(rep.x3))
    payload = {
        "spin": args.spin,
        "dim": rep.dim,
        "lambda_m": _fmt(scale.lam),
        "x3_min_m": _fmt(eigvals[0]),
        "x3_max_m": _fmt(eigvals[-1]),
        "radial_m": _fmt(algebra.radial_observable(rep)),
    }
    if args.check:
        payload["commutator_residual"] = _fmt(algebra.commutator_residual(rep))
    _emit(args, payload)
    outputs = []
    if args.dump_matrices:
        for name, mat in zip(("x1", "x2", "x3"), rep.components):
            path = f"{args.dump_matrices}_{name}.csv"
            rows = ((r, c, mat[r, c].real, mat[r, c].imag)
                    for r in range(rep.dim) for c in range(rep.dim))
            _write_csv(path, "row,col,re,im", rows)
            outputs.append(path)
    if outputs:
        write_manifest("algebra", args, outputs)
    return 0


def _cmd_noise(args) -> int:
    scale = _scale_from_args(args)
    series = noise.generate_timeseries(args.arm_length, args.rate,
                                       args.duration, args.seed, scale)
    _write_csv(args.out, "t_s,x_m", zip(series.times(), series.samples))
    write_manifest("noise", args, [args.out])
    _emit(args, {
        "samples": len(series.samples),
        "rms_m": _fmt(float(np.sqrt(np.mean(series.samples ** 2)))),
        "coherence_time_s": _fmt(series.coherence_time),
        "out": args.out,
    })
    return 0


def _read_series_csv(path):
    data = np.loadtxt(path, delimiter=",", skiprows=1)
    if data.ndim != 2 or data.shape[1] != 2 or data.shape[0] < 2:
        raise QGeomError(f"{path}: expected t_s,x_m rows")
    t, x = data[:, 0], data[:, 1]
    return 1.0 / (t[1] - t[0]), x


def _cmd_spectrum(args) -> int:
    scale = _scale_from_args(args)
    rate, samples = _read_series_csv(args.input)
    series = noise.NoiseSeries(samples=samples, sample_rate=rate,
                               arm_length=args.arm_length, seed=0,
                               coherence_time=2.0 * args.arm_length / scale.c)
    est = noise.power_spectrum(series, args.segment_length, args.overlap_fraction)
    _write_csv(args.out, "f_hz,psd_m2_per_hz", zip(est.frequencies, est.psd))
    write_manifest("spectrum", args, [args.out])
    _emit(args, {
        "segments": est.segment_count,
        "df_hz": _fmt(est.frequencies[1] - est.frequencies[0]),
        "out": args.out,
    })
    return 0


def _cmd_interferometer(args) -> int:
    scale = _scale_from_args(args)
    if args.config:
        cfg = interferometer.load_config(args.config)
    elif args.arm_length is not None:
        cfg = interferometer.InterferometerConfig(arm_length=args.arm_length)
    else:
        raise QGeomError("need --config or --arm-length")
    payload = {
        "label": cfg.label,
        "arm_length_m": _fmt(cfg.arm_length),
        "rms_m": _fmt(interferometer.predict_rms(cfg, scale)),
        "knee_hz": _fmt(scale.c / (2.0 * cfg.arm_length)),
    }
    outputs = []
    if args.out:
        freqs = np.linspace(args.f_min, args.f_max, args.n_freq)
        if args.config_b:
            other = interferometer.load_config(args.config_b)
            est = interferometer.cross_spectrum(cfg, other, freqs, scale)
        else:
            est = interferometer.predict_output_psd(cfg, freqs, scale)
        _write_csv(args.out, "f_hz,psd_m2_per_hz", zip(est.frequencies, est.psd))
        outputs.append(args.out)
    if args.floor is not None:
        report = interferometer.detectability(
            cfg, args.floor, (args.band_lo, args.band_hi),
            args.integration_time, scale)
        payload.update({
            "snr_proxy": _fmt(report.snr_proxy),
            "verdict": report.verdict,
        })
    _emit(args, payload)
    if outputs:
        write_manifest("interferometer", args, outputs)
    return 0


def _cmd_bounds(args) -> int:
    scale = _scale_from_args(args)
    reduced = args.compton_convention == "reduced"
    payload = {
        "planck_length_m": _fmt(scale.planck_length),
        "planck_mass_kg": _fmt(scale.planck_mass),
        "intersection_m": _fmt(bounds.intersection_scale(scale, reduced=reduced)),
    }
    if args.mass is not None:
        payload["mass_kg"] = _fmt(args.mass)
        payload["compton_m"] = _fmt(bounds.compton_size(args.mass, scale, reduced=reduced))
        payload["schwarzschild_m"] = _fmt(bounds.schwarzschild_radius(args.mass, scale))
        if args.size is not None:
            cls = bounds.classify(args.mass, args.size, scale, reduced=reduced)
            payload["regime"] = cls.regime
    _emit(args, payload)
    if args.out:
        masses = np.logspace(math.log10(args.grid_min), math.log10(args.grid_max),
                             args.grid_points)
        rows = ((m, bounds.compton_size(m, scale, reduced=reduced),
                 bounds.schwarzschild_radius(m, scale)) for m in masses)
        _write_csv(args.out, "mass_kg,compton_m,schwarzschild_m", rows)
        write_manifest("bounds", args, [args.out])
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qgeom",
        description="Macroscopic quantum-geometry toolkit (SI units throughout)")
    parser.add_argument("--json", action="store_true",
                        help="emit results as a JSON document")
    parser.add_argument("--hbar", type=float, default=None, help=argparse.SUPPRESS)
    parser.add_argument("--G", type=float, default=None, help=argparse.SUPPRESS)
    parser.add_argument("--c", type=float, default=None, help=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("algebra", help="build a position-algebra representation")
    p.add_argument("--spin", type=float, required=True)
    p.add_argument("--check", action="store_true",
                   help="print the worst commutator residual")
    p.add_argument("--dump-matrices", metavar="PREFIX",
                   help="write x1/x2/x3 as PREFIX_x{1,2,3}.csv")
    p.set_defaults(func=_cmd_algebra)

    p = sub.add_parser("noise", help="synthesize a jitter time series")
    p.add_argument("--arm-length", type=float, required=True, help="L in m")
    p.add_argument("--rate", type=float, required=True, help="sample rate Hz")
    p.add_argument("--duration", type=float, required=True, help="seconds")
    p.add_argument("--seed", type=int,
                   default=int(os.environ.get("QGEOM_SEED", "0")))
    p.add_argument("--out", required=True, help="series CSV path")
    p.set_defaults(func=_cmd_noise)

    p = sub.add_parser("spectrum", help="Welch PSD of a series CSV")
    p.add_argument("--input", required=True, help="series CSV (t_s,x_m)")
    p.add_argument("--arm-length", type=float, required=True)
    p.add_argument("--segment-length", type=int, default=4096)
    p.add_argument("--overlap-fraction", type=float, default=0.5)
    p.add_argument("--out", required=True, help="spectrum CSV path")
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("interferometer", help="model spectra and detectability")
    p.add_argument("--config", help="apparatus key-value file")
    p.add_argument("--config-b", help="second apparatus, for a cross-spectrum")
    p.add_argument("--arm-length", type=float, help="inline apparatus, m")
    p.add_argument("--f-min", type=float, default=0.0)
    p.add_argument("--f-max", type=float, default=2.0e7)
    p.add_argument("--n-freq", type=int, default=2001)
    p.add_argument("--out", help="spectrum CSV path")
    p.add_argument("--floor", type=float, help="instrument floor m^2/Hz")
    p.add_argument("--band-lo", type=float, default=1.0e6)
    p.add_argument("--band-hi", type=float, default=5.0e6)
    p.add_argument("--integration-time", type=float, default=3600.0)
    p.set_defaults(func=_cmd_interferometer)

    p = sub.add_parser("bounds", help="size/mass boundary lines and regimes")
    p.add_argument("--mass", type=float, help="kg")
    p.add_argument("--size", type=float, help="m; classify (mass, size)")
    p.add_argument("--compton-convention", choices=("reduced", "full"),
                   default="reduced")
    p.add_argument("--grid-min", type=float, default=1.0e-30)
    p.add_argument("--grid-max", type=float, default=1.0e40)
    p.add_argument("--grid-points", type=int, default=1000)
    p.add_argument("--out", help="curve CSV path")
    p.set_defaults(func=_cmd_bounds)
    return parser


def run(argv: list[str]) -> int:
    """Parse argv, dispatch, and map errors to exit codes."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.hbar is None:
        args.hbar = derive_planck_scale().hbar
    if args.G is None:
        args.G = derive_planck_scale().G
    if args.c is None:
        args.c = derive_planck_scale().c
    try:
        return args.func(args)
    except QGeomError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def rerun_from_manifest(path) -> int:
    """Re-execute a recorded run exactly as serialized."""
    manifest = json.loads(Path(path).read_text())
    return run(manifest_argv(manifest))


def main() -> None:
    sys.exit(run(sys.argv[1:]))
