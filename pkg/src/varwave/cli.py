"""Command-line entry point.

Subcommands: run, converge, kappa-study, stepper-study.  Flags may also be
supplied through a ``key = value`` config file (--config); explicit flags win.
Exit codes: 0 success, 1 configuration error, 2 blow-up (NaN/Inf) abort.
"""

import argparse
import sys
from pathlib import Path

from .harness import (SCHEMES_1D, ConfigError, RunConfig, convergence_study,
                      kappa_study, run, timestepper_study, write_table_csv)
from .timestepping import INTEGRATORS, NonFiniteStateError


class _Parser(argparse.ArgumentParser):
    # spec'd exit codes reserve 2 for blow-up aborts
    def error(self, message):
        self.exit(1, f"{self.prog}: error: {message}\n")


def _dx(token):
    token = token.strip()
    if "^" in token:
        base, _, exp = token.partition("^")
        return float(base) ** float(exp)
    return float(token)


def _dx_list(text):
    return [_dx(t) for t in text.split(",") if t.strip()]


def _float_list(text):
    return [float(t) for t in text.split(",") if t.strip()]


def _str_list(text):
    return [t.strip() for t in text.split(",") if t.strip()]


def _add_common(p):
    p.add_argument("--config", help="key = value file mirroring the flags")
    p.add_argument("--problem", default="gaussian")
    p.add_argument("--integrator", default="ssprk3", choices=INTEGRATORS)
    p.add_argument("--theta", type=float, default=0.4, help="CFL number in (0, 0.5]")
    p.add_argument("--tend", type=float, default=1.0)
    p.add_argument("--alpha", type=float, default=None)
    p.add_argument("--beta", type=float, default=None)
    p.add_argument("--kappa", type=float, default=1.0, help="viscosity scale (dissipative schemes)")
    p.add_argument("--out", default=None, help="output directory for CSV files")


def _build_parser():
    parser = _Parser(prog="varwave")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", parents=[], help="single trajectory with snapshots and energy log")
    _add_common(p)
    p.add_argument("--scheme", default="vw-cons")
    p.add_argument("--nx", type=int, default=480, help="cells per axis")
    p.add_argument("--nu", type=float, default=1.0, help="w-field viscosity (2D)")
    p.add_argument("--u-evolution", default="p", choices=("p", "v"),
                   help="evolve the 2D angle by p (time derivative) or by the printed v")
    p.add_argument("--snap-times", type=_float_list, default=[],
                   help="comma-separated snapshot times")

    p = sub.add_parser("converge", help="distance table against a fine reference run")
    _add_common(p)
    p.add_argument("--schemes", type=_str_list, default=list(SCHEMES_1D))
    p.add_argument("--dx", type=_dx_list, required=True,
                   help="comma-separated cell sizes, e.g. 2^-2,2^-3")
    p.add_argument("--dx-ref", type=_dx, default=2.0 ** -9)
    p.add_argument("--ref-scheme", default="vw-cons")

    p = sub.add_parser("kappa-study", help="viscosity-scale sweep of the dissipative scheme")
    _add_common(p)
    p.add_argument("--dx", type=_dx_list, required=True)
    p.add_argument("--dx-ref", type=_dx, default=2.0 ** -9)
    p.add_argument("--kappas", type=_float_list, default=[0.05, 0.1, 1.0, 2.0])
    p.add_argument("--ref-kappa", type=float, default=1.0)

    p = sub.add_parser("stepper-study", help="energy ratios under each integrator and CFL number")
    _add_common(p)
    p.add_argument("--dx", type=_dx_list, required=True)
    p.add_argument("--thetas", type=_float_list, default=[0.1, 0.2, 0.4])
    p.add_argument("--integrators", type=_str_list, default=list(INTEGRATORS))
    p.add_argument("--scheme", default="vw-cons")

    return parser


def _config_tokens(path):
    tokens = []
    for raw in Path(path).read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ConfigError(f"malformed config line {raw!r} (expected key = value)")
        tokens += [f"--{key.strip().replace('_', '-')}", value.strip()]
    return tokens


def _print_table(table, out, name):
    for dx, label, value in table.rows:
        print(f"{dx:12.6g}  {label:24s}  {value:.6g}")
    if out is not None:
        Path(out).mkdir(parents=True, exist_ok=True)
        path = Path(out) / name
        write_table_csv(path, table)
        print(f"wrote {path}")


def _cmd_run(args):
    cfg = RunConfig(problem=args.problem, scheme=args.scheme, integrator=args.integrator,
                    n_cells=args.nx, theta=args.theta, t_end=args.tend,
                    kappa=args.kappa, nu=args.nu, alpha=args.alpha, beta=args.beta,
                    u_evolution=args.u_evolution, snap_times=tuple(args.snap_times),
                    out_dir=args.out)
    res = run(cfg)
    print(f"steps      {res.steps}")
    print(f"E_initial  {res.e_initial:.10g}")
    print(f"E_final    {res.e_final:.10g}")
    print(f"E_rel      {res.e_rel:.10g}")
    return 0


def _cmd_converge(args):
    table = convergence_study(problem=args.problem, schemes=args.schemes,
                              dx_list=args.dx, ref_scheme=args.ref_scheme,
                              dx_ref=args.dx_ref, t_end=args.tend, theta=args.theta,
                              integrator=args.integrator, kappa=args.kappa)
    _print_table(table, args.out, f"d2_{args.problem}_T{args.tend:g}.csv")
    return 0


def _cmd_kappa(args):
    d2, erel = kappa_study(dx_list=args.dx, kappa_list=args.kappas, t_end=args.tend,
                           theta=args.theta, dx_ref=args.dx_ref,
                           ref_kappa=args.ref_kappa, integrator=args.integrator)
    print("d2 to the dissipative reference:")
    _print_table(d2, args.out, "kappa_d2.csv")
    print("energy ratios:")
    _print_table(erel, args.out, "kappa_erel.csv")
    return 0


def _cmd_stepper(args):
    table = timestepper_study(dx_list=args.dx, theta_list=args.thetas,
                              integrators=args.integrators, t_end=args.tend,
                              scheme=args.scheme)
    _print_table(table, args.out, "stepper_erel.csv")
    return 0


_COMMANDS = {"run": _cmd_run, "converge": _cmd_converge,
             "kappa-study": _cmd_kappa, "stepper-study": _cmd_stepper}


def main(argv=None):
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "config", None):
            args = parser.parse_args([argv[0]] + _config_tokens(args.config) + argv[1:])
        return _COMMANDS[args.command](args)
    except SystemExit as exc:
        return int(exc.code or 0)
    except NonFiniteStateError as exc:
        print(f"varwave: blow-up: {exc}", file=sys.stderr)
        return 2
    except (ConfigError, ValueError, OSError) as exc:
        print(f"varwave: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
