"""Command-line surface: compose, simulate, observe, entropy, scales, verify.

Results are JSON on stdout (full float precision, as Python's repr emits);
bulk series go to CSV.  Every result embeds a run manifest with the resolved
parameters, seed, constants and version, so a run can be reproduced from its
own output.  Exit codes: 0 success, 1 verification/run failure, 2 invalid
input, 3 indeterminate composition.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from datetime import datetime, timezone
from typing import Optional, Sequence

import numpy as np

from . import __version__
from . import entropy as ent
from . import kinematics as kin
from .errors import (
    IndeterminateComposition,
    LightSpeedSingularity,
    NoAcceptedTicks,
    ZitterError,
)
from .scales import HBAR, SPEED_OF_LIGHT, ParticleScale, particle_mass, scale_for_particle
from .simulate import (
    SimConfig,
    estimate_drift,
    generate_path,
    observe_from_moving_frame,
    run_ensemble,
    write_path_csv,
)
from .verification import LEVELS, run_verification

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INVALID_INPUT = 2
EXIT_INDETERMINATE = 3


@dataclass(frozen=True)
class RunManifest:
    """Everything needed to audit and re-run a CLI invocation."""

    command: str
    parameters: dict
    seed: Optional[int]
    constants: dict
    version: str
    timestamp: str

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "parameters": self.parameters,
            "seed": self.seed,
            "constants": self.constants,
            "version": self.version,
            "timestamp": self.timestamp,
        }


def _manifest(command: str, parameters: dict, seed: Optional[int] = None) -> dict:
    return RunManifest(
        command=command,
        parameters=parameters,
        seed=seed,
        constants={
            "speed_of_light_m_per_s": SPEED_OF_LIGHT,
            "hbar_J_s": HBAR,
        },
        version=__version__,
        timestamp=datetime.now(timezone.utc).isoformat(),
    ).to_dict()


def _emit(payload: dict) -> None:
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _unit(args: argparse.Namespace) -> ent.EntropyUnit:
    return ent.EntropyUnit(args.unit)


def _distribution_dict(d: kin.DirectionDistribution) -> dict:
    return {"p_right": d.p_right, "p_left": d.p_left}


def _parse_grid(raw: str) -> np.ndarray:
    """Parse ``start:stop:count`` into an endpoint-inclusive grid."""
    parts = raw.split(":")
    if len(parts) != 3:
        raise ValueError(f"grid must be start:stop:count, got {raw!r}")
    start, stop = float(parts[0]), float(parts[1])
    count = int(parts[2])
    if count < 1:
        raise ValueError(f"grid count must be >= 1, got {count}")
    kin.as_beta(start)
    kin.as_beta(stop)
    return np.linspace(start, stop, count)


def cmd_compose(args: argparse.Namespace) -> int:
    unit = _unit(args)
    u = kin.as_beta(args.u)
    v = kin.as_beta(args.v)
    w = kin.velocity_addition(u, v)
    u_dist = kin.direction_distribution_from_beta(u)
    v_dist = kin.direction_distribution_from_beta(v)
    composed = kin.compose_frames(v_dist, u_dist)
    _emit(
        {
            "w": w.value,
            "unit": unit.value,
            "observer": {
                "beta": u.value,
                "distribution": _distribution_dict(u_dist),
                "entropy": ent.entropy_from_distribution(u_dist, unit).value,
            },
            "particle": {
                "beta": v.value,
                "distribution": _distribution_dict(v_dist),
                "entropy": ent.entropy_from_distribution(v_dist, unit).value,
            },
            "composed": {
                "beta": w.value,
                "distribution": _distribution_dict(composed),
                "entropy": ent.entropy_from_distribution(composed, unit).value,
            },
            "manifest": _manifest("compose", {"u": u.value, "v": v.value, "unit": unit.value}),
        }
    )
    return EXIT_OK


def _build_config(args: argparse.Namespace) -> SimConfig:
    scale = scale_for_particle(args.particle) if args.particle else None
    flip = tuple(args.flip_asymmetry) if args.flip_asymmetry else None
    return SimConfig(
        beta=args.beta,
        ticks=args.ticks,
        seed=args.seed,
        dynamics=args.dynamics,
        flip_asymmetry=flip,
        tick_duration=args.tick_duration,
        scale=scale,
    )


def cmd_simulate(args: argparse.Namespace) -> int:
    cfg = _build_config(args)
    parameters = {
        "beta": cfg.beta,
        "ticks": cfg.ticks,
        "dynamics": cfg.dynamics,
        "flip_asymmetry": list(cfg.flip_asymmetry) if cfg.flip_asymmetry else None,
        "tick_duration": cfg.resolved_tick_duration,
        "particle": args.particle,
        "replicates": args.replicates,
    }
    if args.replicates > 1:
        if args.path:
            raise ValueError("--path dumps a single path; drop --replicates")
        result = run_ensemble(cfg, args.replicates)
        payload = {
            "replicates": [e.to_dict() for e in result.replicates],
            "pooled": result.pooled.to_dict(),
            "manifest": _manifest("simulate", parameters, cfg.seed),
        }
        _emit(payload)
        return EXIT_OK
    path = generate_path(cfg)
    estimate = estimate_drift(path)
    if args.path:
        with open(args.path, "w", newline="") as fh:
            write_path_csv(path, fh)
    payload = estimate.to_dict()
    payload["manifest"] = _manifest("simulate", parameters, cfg.seed)
    _emit(payload)
    return EXIT_OK


def cmd_observe(args: argparse.Namespace) -> int:
    obs = observe_from_moving_frame(args.u, args.v, ticks=args.ticks, seed=args.seed)
    payload = obs.to_dict()
    payload["manifest"] = _manifest(
        "observe", {"u": args.u, "v": args.v, "ticks": args.ticks}, args.seed
    )
    _emit(payload)
    return EXIT_OK


def _entropy_row(b: float) -> tuple[float, float, float, float, float]:
    s_nats = ent.entropy_from_beta(b, ent.EntropyUnit.NATS).value
    s_bits = ent.entropy_from_beta(b, ent.EntropyUnit.BITS).value
    try:
        gamma = ent.lorentz_gamma(b)
        one_plus_z = ent.redshift_factor(b)
    except LightSpeedSingularity:
        gamma = one_plus_z = float("nan")
    return b, s_nats, s_bits, gamma, one_plus_z


def cmd_entropy(args: argparse.Namespace) -> int:
    unit = _unit(args)
    if args.grid:
        grid = _parse_grid(args.grid)
        target = open(args.csv, "w", newline="") if args.csv else sys.stdout
        try:
            target.write("beta,S_nats,S_bits,gamma,one_plus_z\n")
            for b in grid:
                row = _entropy_row(float(b))
                target.write(",".join(repr(x) for x in row) + "\n")
        finally:
            if args.csv:
                target.close()
        return EXIT_OK
    b = kin.as_beta(args.beta)
    s = ent.entropy_from_beta(b, unit)
    try:
        gamma = ent.lorentz_gamma(b)
        one_plus_z = ent.redshift_factor(b)
        s_relativistic = ent.entropy_relativistic_form(b).value
    except LightSpeedSingularity:
        gamma = one_plus_z = s_relativistic = None
    _emit(
        {
            "beta": b.value,
            "unit": unit.value,
            "S": s.value,
            "S_nats": s.to(ent.EntropyUnit.NATS).value,
            "S_bits": s.to(ent.EntropyUnit.BITS).value,
            "S_relativistic_nats": s_relativistic,
            "gamma": gamma,
            "one_plus_z": one_plus_z,
            "manifest": _manifest("entropy", {"beta": b.value, "unit": unit.value}),
        }
    )
    return EXIT_OK


def cmd_scales(args: argparse.Namespace) -> int:
    if (args.particle is None) == (args.mass_kg is None):
        raise ValueError("provide exactly one of --particle or --mass-kg")
    if args.particle:
        mass = particle_mass(args.particle)
    else:
        mass = args.mass_kg
    scale = ParticleScale.from_mass(mass)
    _emit(
        {
            "particle": args.particle,
            "mass_kg": scale.mass_kg,
            "omega_rad_per_s": scale.omega_rad_per_s,
            "frequency_hz": scale.frequency_hz,
            "lambda_m": scale.length_m,
            "tick_duration_s": scale.tick_duration_s,
            "manifest": _manifest(
                "scales", {"particle": args.particle, "mass_kg": scale.mass_kg}
            ),
        }
    )
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    report = run_verification(args.level)
    payload = report.to_dict()
    payload["manifest"] = _manifest("verify", {"level": args.level})
    _emit(payload)
    return EXIT_OK if report.passed else EXIT_FAILURE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zittersim",
        description="Probability calculus and Monte Carlo simulator for "
        "light-speed tick motion in 1+1 dimensions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output_flags(p: argparse.ArgumentParser, unit: bool = True) -> None:
        p.add_argument(
            "--json", action="store_true", default=True,
            help="emit JSON to stdout (default)",
        )
        if unit:
            p.add_argument(
                "--unit", choices=["nats", "bits"], default="nats",
                help="entropy unit (default: nats)",
            )

    p = sub.add_parser("compose", help="relativistic velocity addition, both routes")
    p.add_argument("--u", type=float, required=True, help="observer velocity in [-1, 1]")
    p.add_argument("--v", type=float, required=True, help="particle velocity in [-1, 1]")
    add_output_flags(p)
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("simulate", help="seeded +/-c tick process and drift estimate")
    p.add_argument("--beta", type=float, required=True, help="target drift in [-1, 1]")
    p.add_argument("--ticks", type=int, required=True, help="number of ticks >= 1")
    p.add_argument("--seed", type=int, required=True, help="64-bit unsigned seed")
    p.add_argument(
        "--dynamics", choices=["iid", "telegraph"], default="iid",
        help="per-tick law (default: iid)",
    )
    p.add_argument(
        "--flip-asymmetry", type=float, nargs=2, metavar=("FROM_RIGHT", "FROM_LEFT"),
        help="telegraph flip probabilities; must keep Pr(R) = (1+beta)/2",
    )
    p.add_argument("--tick-duration", type=float, help="seconds per tick")
    p.add_argument(
        "--particle", choices=["electron", "muon", "proton"],
        help="attach a physical scale (tick duration defaults to 1/omega)",
    )
    p.add_argument("--path", metavar="CSV", help="also dump the path as tick CSV")
    p.add_argument("--replicates", type=int, default=1, help="independent replicates")
    add_output_flags(p, unit=False)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("observe", help="rejection-sampled drift from a moving frame")
    p.add_argument("--u", type=float, required=True, help="observer velocity in [-1, 1]")
    p.add_argument("--v", type=float, required=True, help="particle velocity in [-1, 1]")
    p.add_argument("--ticks", type=int, required=True, help="total ticks to sample")
    p.add_argument("--seed", type=int, required=True, help="64-bit unsigned seed")
    add_output_flags(p, unit=False)
    p.set_defaults(func=cmd_observe)

    p = sub.add_parser("entropy", help="observer-dependent entropy of the motion")
    p.add_argument("--beta", type=float, help="average velocity in [-1, 1]")
    p.add_argument(
        "--grid", metavar="START:STOP:COUNT",
        help="sweep an inclusive grid and emit CSV instead of JSON",
    )
    p.add_argument("--csv", metavar="PATH", help="write grid CSV to PATH (default stdout)")
    add_output_flags(p)
    p.set_defaults(func=cmd_entropy)

    p = sub.add_parser("scales", help="tick frequency and length for a mass")
    p.add_argument("--particle", help="named particle: electron, muon, proton")
    p.add_argument("--mass-kg", type=float, help="mass in kilograms")
    add_output_flags(p, unit=False)
    p.set_defaults(func=cmd_scales)

    p = sub.add_parser("verify", help="run the invariant suite and report")
    p.add_argument("--level", choices=list(LEVELS), default="fast")
    add_output_flags(p, unit=False)
    p.set_defaults(func=cmd_verify)

    return parser


def _join_grid_value(argv: Sequence[str]) -> list[str]:
    # argparse mistakes "-0.99:0.99:199" for an option; fold it into --grid=.
    out: list[str] = []
    tokens = iter(argv)
    for token in tokens:
        if token == "--grid":
            value = next(tokens, None)
            out.append(token if value is None else f"--grid={value}")
        else:
            out.append(token)
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_join_grid_value(argv))
    if args.command == "entropy" and (args.beta is None) == (args.grid is None):
        print("error: provide exactly one of --beta or --grid", file=sys.stderr)
        return EXIT_INVALID_INPUT
    try:
        return args.func(args)
    except BrokenPipeError:
        # downstream consumer (head, etc.) closed the pipe; not an error
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return EXIT_OK
    except IndeterminateComposition as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INDETERMINATE
    except NoAcceptedTicks as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    except (ZitterError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT


if __name__ == "__main__":
    sys.exit(main())
