"""Energy conservative and dissipative finite difference solvers for the
nonlinear variational wave equation of nematic liquid crystal director fields."""

from .coefficients import Material, wave_speed, wave_speed_deriv
from .diagnostics import (EnergyLog, energy_2d, energy_ham, energy_ratio,
                          energy_rs, energy_vw, leapfrog_energy,
                          rel_l2_distance, restrict_to_coarse)
from .grid import Grid1D, Grid2D
from .harness import (DistanceTable, RunConfig, RunResult, convergence_study,
                      kappa_study, run, timestepper_study)
from .problems import gaussian_pulse, traveling_wave, trig_2d, tw_ode_residual
from .schemes1d import (StateHam, StateRS, StateVW, Viscosity, init_ham,
                        init_rs, init_vw, rhs_hamiltonian, rhs_rs_conservative,
                        rhs_rs_dissipative, rhs_vw_conservative,
                        rhs_vw_dissipative, vw_from_ham, vw_from_rs)
from .schemes2d import (State2D, Viscosity2D, init_2d, rhs_2d_conservative,
                        rhs_2d_dissipative)
from .timestepping import (NonFiniteStateError, StepControl, cfl_dt, integrate,
                           leapfrog_step, rk4_step, ssprk2_step, ssprk3_step)
