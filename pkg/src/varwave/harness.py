"""Experiment driver: single runs, convergence/kappa/stepper studies, CSV output.

A RunConfig pins everything a trajectory depends on, so identical configs
reproduce byte-identical CSV files.  Studies fan independent runs out over a
process pool (VARWAVE_WORKERS workers, sequential by default) and merge rows
in a fixed order.
"""

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from pathlib import Path

import numpy as np

from .diagnostics import (EnergyLog, energy_2d, energy_ham, energy_rs,
                          energy_vw, rel_l2_distance, restrict_to_coarse)
from .problems import gaussian_pulse, traveling_wave, trig_2d
from .schemes1d import (StateHam, StateRS, StateVW, Viscosity, init_ham,
                        init_rs, init_vw, rhs_hamiltonian, rhs_rs_conservative,
                        rhs_rs_dissipative, rhs_vw_conservative,
                        rhs_vw_dissipative, vw_from_ham, vw_from_rs)
from .schemes2d import State2D, Viscosity2D, init_2d, rhs_2d_conservative, rhs_2d_dissipative
from .timestepping import INTEGRATORS, cfl_dt, integrate

SCHEMES_1D = ("vw-cons", "vw-diss", "rs-cons", "rs-diss", "ham")
SCHEMES_2D = ("2d-cons", "2d-diss")
PROBLEMS = ("gaussian", "traveling-wave", "trig2d")
FMT = "%.17g"


class ConfigError(ValueError):
    """Invalid run or study configuration."""


@dataclass(frozen=True)
class RunConfig:
    problem: str = "gaussian"
    scheme: str = "vw-cons"
    integrator: str = "ssprk3"
    n_cells: int = 480
    theta: float = 0.4
    t_end: float = 1.0
    kappa: float = 1.0
    nu: float = 1.0
    alpha: float | None = None
    beta: float | None = None
    u_evolution: str = "p"
    snap_times: tuple = ()
    out_dir: str | None = None

    def __post_init__(self):
        if self.problem not in PROBLEMS:
            raise ConfigError(f"unknown problem {self.problem!r}")
        if self.scheme not in SCHEMES_1D + SCHEMES_2D:
            raise ConfigError(f"unknown scheme {self.scheme!r}")
        if self.integrator not in INTEGRATORS:
            raise ConfigError(f"unknown integrator {self.integrator!r}")
        if not 0.0 < self.theta <= 0.5:
            raise ConfigError(f"theta must lie in (0, 0.5], got {self.theta}")
        if self.t_end < 0 or self.n_cells < 1 or self.kappa < 0 or self.nu < 0:
            raise ConfigError("negative t_end/kappa/nu or empty grid")
        is_2d = self.scheme in SCHEMES_2D
        if is_2d != (self.problem == "trig2d"):
            raise ConfigError(f"scheme {self.scheme!r} does not fit problem {self.problem!r}")
        if self.problem == "traveling-wave" and (self.alpha is not None or self.beta is not None):
            raise ConfigError("the traveling-wave exact solution pins alpha=0.5, beta=1.5")


def make_problem(cfg):
    if cfg.problem == "gaussian":
        return gaussian_pulse(cfg.alpha if cfg.alpha is not None else 0.5,
                              cfg.beta if cfg.beta is not None else 4.5)
    if cfg.problem == "traveling-wave":
        return traveling_wave()
    return trig_2d(cfg.alpha if cfg.alpha is not None else 0.5,
                   cfg.beta if cfg.beta is not None else 1.5)


def _setup(cfg):
    """Build (grid, mat, y0, rhs, energy, u_row) for a config; states are stacked arrays."""
    problem = make_problem(cfg)
    mat = problem.material
    if cfg.scheme in SCHEMES_2D:
        grid = problem.grid(cfg.n_cells)
        xx, yy = grid.nodes()
        grads = (problem.u0x(xx, yy), problem.u0y(xx, yy)) if problem.u0x else (None, None)
        state = init_2d(problem.u0(xx, yy), problem.u1(xx, yy), mat, grid, *grads)
        if cfg.scheme == "2d-cons":
            def rhs(y):
                return np.stack(rhs_2d_conservative(State2D(*y), mat, grid, cfg.u_evolution))
        else:
            visc = Viscosity2D(cfg.kappa, cfg.kappa, cfg.nu)

            def rhs(y):
                return np.stack(rhs_2d_dissipative(State2D(*y), mat, grid, visc, cfg.u_evolution))

        def energy(y):
            return energy_2d(State2D(*y), mat, grid)

        return grid, mat, np.stack(state), rhs, energy, 3

    grid = problem.grid(cfg.n_cells)
    x = grid.nodes()
    u0 = problem.u0(x)
    u1 = problem.u1(x)
    u0x = problem.u0x(x) if problem.u0x else None
    if cfg.scheme in ("vw-cons", "vw-diss"):
        state = init_vw(u0, u1, mat, grid, u0x)
        if cfg.scheme == "vw-cons":
            def rhs(y):
                return np.stack(rhs_vw_conservative(StateVW(*y), mat, grid))
        else:
            visc = Viscosity(cfg.kappa)

            def rhs(y):
                return np.stack(rhs_vw_dissipative(StateVW(*y), mat, grid, visc))

        def energy(y):
            return energy_vw(StateVW(*y), grid)

        return grid, mat, np.stack(state), rhs, energy, 2
    if cfg.scheme in ("rs-cons", "rs-diss"):
        state = init_rs(u0, u1, mat, grid, u0x)
        if cfg.scheme == "rs-cons":
            def rhs(y):
                return np.stack(rhs_rs_conservative(StateRS(*y), mat, grid))
        else:
            visc = Viscosity(cfg.kappa)

            def rhs(y):
                return np.stack(rhs_rs_dissipative(StateRS(*y), mat, grid, visc))

        def energy(y):
            return energy_rs(StateRS(*y), grid)

        return grid, mat, np.stack(state), rhs, energy, 2
    state = init_ham(u0, u1, grid)

    def rhs(y):
        return np.stack(rhs_hamiltonian(StateHam(*y), mat, grid))

    def energy(y):
        return energy_ham(StateHam(*y), mat, grid)

    return grid, mat, np.stack(state), rhs, energy, 0


def state_columns(cfg, y, mat, grid):
    """Named output fields of a stacked state, in CSV column order."""
    if cfg.scheme in SCHEMES_2D:
        st = State2D(*y)
        return {"u": st.u, "p": st.p, "v": st.v, "w": st.w}
    if cfg.scheme in ("vw-cons", "vw-diss"):
        st = StateVW(*y)
    elif cfg.scheme in ("rs-cons", "rs-diss"):
        st = vw_from_rs(StateRS(*y))
    else:
        st = vw_from_ham(StateHam(*y), mat, grid)
    return {"u": st.u, "v": st.v, "w": st.w}


@dataclass
class RunResult:
    config: RunConfig
    dx: float
    steps: int
    e_initial: float
    e_final: float
    e_rel: float
    u_final: np.ndarray
    snapshots: dict = field(default_factory=dict)  # time -> stacked state
    energy_log: EnergyLog = field(default_factory=EnergyLog)


def provenance(cfg, grid):
    meta = {
        "problem": cfg.problem,
        "scheme": cfg.scheme,
        "integrator": cfg.integrator,
        "theta": cfg.theta,
        "dx": grid.dx,
        "n_cells": cfg.n_cells,
        "t_end": cfg.t_end,
        "kappa": cfg.kappa,
        "boundary": grid.boundary,
    }
    if cfg.scheme in SCHEMES_2D:
        meta["nu"] = cfg.nu
        meta["u_evolution"] = cfg.u_evolution
    return meta


def _fmt(value):
    return FMT % value if isinstance(value, float) else str(value)


def _write_csv(path, meta, header, rows):
    lines = [f"# {k} = {_fmt(v)}" for k, v in meta.items()]
    lines.append(header)
    lines.extend(rows)
    Path(path).write_text("\n".join(lines) + "\n")


def write_state_csv(path, cfg, y, mat, grid, meta):
    cols = state_columns(cfg, y, mat, grid)
    if cfg.scheme in SCHEMES_2D:
        xx, yy = grid.nodes()
        coords = {"x": xx.ravel(), "y": yy.ravel()}
        cols = {k: v.ravel() for k, v in cols.items()}
    else:
        coords = {"x": grid.nodes()}
    cols = coords | cols
    header = ",".join(cols)
    data = np.column_stack(list(cols.values()))
    rows = [",".join(FMT % v for v in row) for row in data]
    _write_csv(path, meta, header, rows)


def run(cfg):
    """Integrate one configuration; writes CSV artifacts when out_dir is set."""
    grid, mat, y0, rhs, energy, u_row = _setup(cfg)
    log = EnergyLog()
    snap_times = sorted({float(t) for t in cfg.snap_times if 0.0 <= t <= cfg.t_end}
                        | {float(cfg.t_end)})
    snap_set = set(snap_times)
    snapshots = {}

    def observer(step, t, y):
        log.append(t, energy(y))
        if t in snap_set:
            snapshots[t] = y.copy()

    def dt_fn(y):
        return cfl_dt(grid, mat, y[u_row], cfg.theta)

    y, t, steps = integrate(y0, rhs, dt_fn, cfg.t_end, cfg.integrator,
                            observer=observer, events=snap_times)
    res = RunResult(cfg, grid.dx, steps, log.energies[0], log.energies[-1],
                    log.energies[-1] / log.energies[0], y[u_row],
                    snapshots, log)
    if cfg.out_dir is not None:
        out = Path(cfg.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        meta = provenance(cfg, grid)
        _write_csv(out / "energy.csv", meta, "t,E",
                   [f"{FMT % ti},{FMT % ei}" for ti, ei in zip(log.times, log.energies)])
        for ti, yi in snapshots.items():
            write_state_csv(out / f"state_t{ti:g}.csv", cfg, yi, mat, grid, meta)
    return res


# ---------------------------------------------------------------------------
# Studies

@dataclass
class DistanceTable:
    """Rows of (dx, label, value) with a descriptor of the reference run."""

    rows: list
    reference: dict

    def value(self, dx, label):
        for r_dx, r_label, r_value in self.rows:
            if r_label == label and np.isclose(r_dx, dx):
                return r_value
        raise KeyError((dx, label))

    def column(self, label):
        return [(dx, v) for dx, lab, v in self.rows if lab == label]


def n_cells_for_dx(problem_name, dx):
    spans = {"gaussian": 30.0, "traveling-wave": 7.0, "trig2d": 1.0}
    n = spans[problem_name] / dx
    if abs(n - round(n)) > 1e-9 * n:
        raise ConfigError(f"dx={dx} does not tile the {problem_name} domain")
    return int(round(n))


def workers_from_env():
    return max(1, int(os.environ.get("VARWAVE_WORKERS", "1")))


def _run_many(configs, workers=None):
    if workers is None:
        workers = workers_from_env()
    if workers <= 1 or len(configs) <= 1:
        return [run(c) for c in configs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run, configs))


def convergence_study(problem="gaussian", schemes=SCHEMES_1D, dx_list=(),
                      ref_scheme="vw-cons", dx_ref=2.0 ** -9, t_end=1.0,
                      theta=0.05, integrator="ssprk3", kappa=1.0, workers=None):
    """d^2 of each scheme/resolution against one reference run, coarse nodes."""
    dx_list = sorted(dx_list, reverse=True)
    base = RunConfig(problem=problem, scheme=ref_scheme, integrator=integrator,
                     n_cells=n_cells_for_dx(problem, dx_ref), theta=theta,
                     t_end=t_end, kappa=kappa)
    configs = [replace(base, scheme=s, n_cells=n_cells_for_dx(problem, dx))
               for dx in dx_list for s in schemes]
    results = _run_many([base] + configs, workers)
    ref, results = results[0], results[1:]
    ref_grid = make_problem(base).grid(base.n_cells)

    rows = []
    for res in results:
        cfg = res.config
        grid = make_problem(cfg).grid(cfg.n_cells)
        u_ref = restrict_to_coarse(ref.u_final, ref_grid, grid)
        rows.append((res.dx, cfg.scheme, rel_l2_distance(res.u_final, u_ref)))
    reference = {"problem": problem, "scheme": ref_scheme, "dx_ref": dx_ref,
                 "integrator": integrator, "theta": theta, "t_end": t_end,
                 "kappa": kappa, "compared_on": "u, fine solution sampled at coarse nodes"}
    return DistanceTable(rows, reference)


def kappa_study(dx_list, kappa_list, t_end=10.0, theta=0.05, dx_ref=2.0 ** -9,
                ref_kappa=1.0, integrator="ssprk3", workers=None):
    """Viscosity-scaling sweep: d^2 to a dissipative reference, plus energy ratios."""
    dx_list = sorted(dx_list, reverse=True)
    base = RunConfig(problem="gaussian", scheme="vw-diss", integrator=integrator,
                     n_cells=n_cells_for_dx("gaussian", dx_ref), theta=theta,
                     t_end=t_end, kappa=ref_kappa)
    configs = [replace(base, n_cells=n_cells_for_dx("gaussian", dx), kappa=k)
               for dx in dx_list for k in kappa_list]
    results = _run_many([base] + configs, workers)
    ref, results = results[0], results[1:]
    ref_grid = make_problem(base).grid(base.n_cells)

    d2_rows, erel_rows = [], []
    for res in results:
        cfg = res.config
        label = f"vw-diss:k={cfg.kappa:g}"
        grid = make_problem(cfg).grid(cfg.n_cells)
        u_ref = restrict_to_coarse(ref.u_final, ref_grid, grid)
        d2_rows.append((res.dx, label, rel_l2_distance(res.u_final, u_ref)))
        erel_rows.append((res.dx, label, res.e_rel))
    reference = {"problem": "gaussian", "scheme": "vw-diss", "kappa_ref": ref_kappa,
                 "dx_ref": dx_ref, "integrator": integrator, "theta": theta, "t_end": t_end}
    return DistanceTable(d2_rows, reference), DistanceTable(erel_rows, reference)


def timestepper_study(dx_list, theta_list, integrators=INTEGRATORS, t_end=10.0,
                      scheme="vw-cons", workers=None):
    """Energy ratio of the conservative scheme under each integrator and CFL number."""
    dx_list = sorted(dx_list, reverse=True)
    configs = [RunConfig(problem="gaussian", scheme=scheme, integrator=integ,
                         n_cells=n_cells_for_dx("gaussian", dx), theta=theta,
                         t_end=t_end)
               for dx in dx_list for theta in theta_list for integ in integrators]
    results = _run_many(configs, workers)
    rows = [(res.dx, f"{res.config.integrator}:theta={res.config.theta:g}", res.e_rel)
            for res in results]
    reference = {"problem": "gaussian", "scheme": scheme, "t_end": t_end,
                 "quantity": "E_rel"}
    return DistanceTable(rows, reference)


def write_table_csv(path, table):
    meta = dict(table.reference)
    rows = [f"{FMT % dx},{label},{FMT % value}" for dx, label, value in table.rows]
    _write_csv(path, meta, "dx,scheme,value", rows)
