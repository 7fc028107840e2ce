"""Command-line surface: solve, scan, manifold, wavefunction, verify.

Machine-readable output only: JSON documents for single results, CSV for
grids.  Complex numbers serialize as [re, im] pairs; CSV floats use
shortest-round-trip formatting.  Exit codes: 0 success, 2 usage error,
3 domain/solver error (error class name on stderr).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import hydrogen, nu, opspace
from .acceptance import run_suite
from .errors import PhasenuError
from .numeric import Poly


def _pair(z: complex) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def _poly_pairs(p: Poly) -> list[list[float]]:
    return [_pair(c) for c in p]


def _parse_floats(text: str, count: int, what: str) -> tuple[float, ...]:
    parts = text.split(",")
    if len(parts) != count:
        raise argparse.ArgumentTypeError(
            f"{what} needs {count} comma-separated values, got {len(parts)}"
        )
    try:
        return tuple(float(x) for x in parts)
    except ValueError as err:
        raise argparse.ArgumentTypeError(f"bad {what}: {err}") from None


def _point_arg(text: str) -> opspace.OpPoint:
    return opspace.OpPoint(*_parse_floats(text, 4, "--point"))


def _g0_arg(text: str) -> opspace.GEta:
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("--g0 needs 4 comma-separated integers")
    try:
        return opspace.GEta(tuple(int(x) for x in parts))
    except ValueError as err:
        raise argparse.ArgumentTypeError(f"bad --g0: {err}") from None


def _grid_arg(text: str) -> tuple[float, float, int]:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("--grid needs rmin,rmax,steps")
    try:
        rmin, rmax, steps = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as err:
        raise argparse.ArgumentTypeError(f"bad --grid: {err}") from None
    if steps < 2 or not rmax > rmin:
        raise argparse.ArgumentTypeError("--grid needs rmax > rmin and steps >= 2")
    return rmin, rmax, steps


def _apply_arg(text: str) -> list[tuple[int, int]]:
    out: list[tuple[int, int]] = []
    for chunk in text.split(","):
        kind_text, _, count_text = chunk.partition(":")
        try:
            kind, count = int(kind_text), int(count_text)
        except ValueError:
            raise argparse.ArgumentTypeError(
                f"bad --apply entry {chunk!r}; expected KIND:COUNT"
            ) from None
        if kind not in (1, 2, 3, 4):
            raise argparse.ArgumentTypeError("--apply kinds must be 1..4")
        out.append((kind, count))
    return out


def _pbar_arg(text: str) -> complex:
    try:
        return complex(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad --pbar value {text!r}") from None


_CUSTOM_KEYS = ("m", "hbar", "k", "e2")


def _load_params(config_path: str | None, L: int) -> hydrogen.PhysicalParams:
    """Unit system from a JSON config file; atomic units when absent."""
    if config_path is None:
        return hydrogen.PhysicalParams(angular_momentum=L)
    with open(config_path, encoding="utf-8") as fh:
        data = json.load(fh)
    unit = data.get("unit_system", "atomic")
    if unit == "atomic":
        return hydrogen.PhysicalParams(angular_momentum=L)
    if unit != "custom":
        raise ValueError(f"unit_system must be 'atomic' or 'custom', got {unit!r}")
    missing = [key for key in _CUSTOM_KEYS if key not in data]
    if missing:
        raise ValueError(f"custom unit system requires {_CUSTOM_KEYS}; missing {missing}")
    values = {key: float(data[key]) for key in _CUSTOM_KEYS}
    if any(v <= 0.0 for v in values.values()):
        raise ValueError("custom constants must all be positive")
    return hydrogen.PhysicalParams(
        mass=values["m"],
        hbar=values["hbar"],
        coulomb_constant=values["k"],
        charge_squared=values["e2"],
        angular_momentum=L,
    )


def _config_for(point: opspace.OpPoint | None, alphadelta: float) -> hydrogen.PhaseSpaceConfig:
    if point is None:
        return hydrogen.canonical_config(alphadelta)
    return hydrogen.PhaseSpaceConfig(point, alphadelta)


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_solve(args: argparse.Namespace) -> int:
    params = _load_params(args.config, args.L)
    config = _config_for(args.point, args.alphadelta)
    constants = hydrogen.derived_constants(params)
    family = hydrogen.build_radial_family(constants, args.alphadelta)
    kappa = nu.solve_kappa(family, args.n)
    problem = family.at(kappa)
    branch = nu.select_branch(problem)
    phi = nu.phi_of(problem, branch)
    rho = nu.rho_of(problem, branch)
    y = nu.rodrigues_y(problem, rho, args.n, 1.0)
    residual = hydrogen.ode_residual(
        params, config, args.n, hydrogen.annulus_samples(100), kappa=kappa
    )
    document = {
        "n": args.n,
        "L": args.L,
        "alphadelta": args.alphadelta,
        "kappa": kappa,
        "energy": constants.energy_of_kappa(kappa),
        "energy_closed_form": hydrogen.closed_form_energy(params, args.n, args.alphadelta),
        "K": _pair(branch.K),
        "pi": _poly_pairs(branch.pi),
        "tau": _poly_pairs(branch.tau),
        "phi": {"rate": _pair(phi.rate), "power": _pair(phi.power)},
        "rho": {"rate": _pair(rho.rate), "power": _pair(rho.power)},
        "y": _poly_pairs(y),
        "residual": residual,
    }
    _emit(json.dumps(document, indent=2) + "\n", args.out)
    return 0


def _cmd_scan(args: argparse.Namespace) -> int:
    lines = ["n,L,energy,residual"]
    samples = hydrogen.annulus_samples(100)
    config = hydrogen.canonical_config(args.alphadelta)
    for n in range(args.n_max + 1):
        for L in range(args.L_max + 1):
            params = _load_params(args.config, L)
            constants = hydrogen.derived_constants(params)
            family = hydrogen.build_radial_family(constants, args.alphadelta)
            kappa = nu.solve_kappa(family, n)
            energy = constants.energy_of_kappa(kappa)
            residual = hydrogen.ode_residual(params, config, n, samples, kappa=kappa)
            lines.append(f"{n},{L},{energy!r},{residual!r}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_manifold(args: argparse.Namespace) -> int:
    applications = [
        (opspace.complement(opspace.fundamental(kind)), count)
        for kind, count in args.apply
    ]
    g0 = args.g0 if args.g0 is not None else opspace.identity()
    composed = opspace.compose(g0, applications)
    document: dict[str, object] = {"g": list(composed.diag)}
    if args.point is not None:
        image, member = opspace.apply_to_point(composed, args.point)
        document["point"] = list(args.point.as_tuple())
        document["transformed"] = list(image.as_tuple())
        document["on_manifold"] = member
    _emit(json.dumps(document, indent=2) + "\n", args.out)
    return 0


def _cmd_wavefunction(args: argparse.Namespace) -> int:
    params = _load_params(args.config, args.L)
    config = _config_for(None, args.alphadelta)
    wf = hydrogen.assemble_wavefunction(params, config, args.n)
    rmin, rmax, steps = args.grid
    header = (
        f"# prefactor_rate={wf.prefactor_rate!r}"
        f" kappa={wf.kappa!r} n={args.n} L={args.L} alphadelta={args.alphadelta!r}"
    )
    lines = [header, "r,A_re,A_im,psi_re,psi_im"]
    point = config.point
    for j in range(steps):
        r = rmin + j * (rmax - rmin) / (steps - 1)
        a_val = point.alpha * r + 1j * params.hbar * point.beta * args.pbar
        psi = wf.body.evaluate(a_val)
        lines.append(
            f"{r!r},{a_val.real!r},{a_val.imag!r},{psi.real!r},{psi.imag!r}"
        )
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    results = run_suite(args.suite)
    width = max(len(r.criterion) for r in results)
    for r in results:
        flag = "PASS" if r.passed else "FAIL"
        sys.stdout.write(
            f"{flag}  {r.criterion:<{width}}  {r.detail}  [{r.measure}]\n"
        )
    failed = sum(1 for r in results if not r.passed)
    sys.stdout.write(
        f"{len(results) - failed}/{len(results)} checks passed\n"
    )
    return 0 if failed == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="phasenu",
        description="Phase-space hydrogen solver and operator-manifold toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="quantize one (n, L) level")
    solve.add_argument("--n", type=int, required=True)
    solve.add_argument("--L", type=int, required=True)
    solve.add_argument("--alphadelta", type=float, required=True)
    solve.add_argument("--point", type=_point_arg, default=None)
    solve.add_argument("--config", default=None)
    solve.add_argument("--out", default=None)
    solve.set_defaults(handler=_cmd_solve)

    scan = sub.add_parser("scan", help="energy table over an (n, L) grid")
    scan.add_argument("--n-max", dest="n_max", type=int, required=True)
    scan.add_argument("--L-max", dest="L_max", type=int, required=True)
    scan.add_argument("--alphadelta", type=float, required=True)
    scan.add_argument("--config", default=None)
    scan.add_argument("--out", default=None)
    scan.set_defaults(handler=_cmd_scan)

    manifold = sub.add_parser("manifold", help="compose and apply transforms")
    manifold.add_argument("--apply", type=_apply_arg, required=True)
    manifold.add_argument("--g0", type=_g0_arg, default=None)
    manifold.add_argument("--point", type=_point_arg, default=None)
    manifold.add_argument("--out", default=None)
    manifold.set_defaults(handler=_cmd_manifold)

    wavefunction = sub.add_parser("wavefunction", help="tabulate a solved state")
    wavefunction.add_argument("--n", type=int, required=True)
    wavefunction.add_argument("--L", type=int, required=True)
    wavefunction.add_argument("--alphadelta", type=float, required=True)
    wavefunction.add_argument("--grid", type=_grid_arg, required=True)
    wavefunction.add_argument("--pbar", type=_pbar_arg, default=0j)
    wavefunction.add_argument("--config", default=None)
    wavefunction.add_argument("--out", default=None)
    wavefunction.set_defaults(handler=_cmd_wavefunction)

    verify = sub.add_parser("verify", help="run the acceptance checks")
    verify.add_argument(
        "--suite",
        choices=("nu", "opspace", "hta", "oracle", "all"),
        default="all",
    )
    verify.set_defaults(handler=_cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except PhasenuError as err:
        print(f"{type(err).__name__}: {err}", file=sys.stderr)
        return 3
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
