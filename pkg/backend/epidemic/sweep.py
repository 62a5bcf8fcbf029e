"""
Forward-backward sweep for the treatment control problem

    minimize J(I, T) = int_0^tf (k1 I(t) + k2 T(t)^2) dt,  0 <= T(t) <= T_max.

Each iteration solves the state forward under the current control, the
co-state backward (as a forward solve in reversed time from a zero initial
co-state), and moves the control towards the projected extremal value.
"""
import logging
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import trapezoid

from fractional.exceptions import DegenerateSignalError, GridMismatchError, InvalidParametersError
from fractional.solvers import Predictor, Trajectory, solve_pece
from .dynamics import adjoint_field, state_field
from .models import ControlSignal

logger = logging.getLogger('epidemic')

# Signals whose largest magnitude stays below this are left out of the metric.
DEAD_SIGNAL = 1e-14
# Published fractions carry six decimals and sum to 1.0000002.
TOTAL_TOLERANCE = 1e-6


@dataclass(frozen=True)
class SweepConfig:
    k1: float = 1.0
    k2: float = 0.001
    t_max_control: float = 1.0
    tol_percent: float = 0.001
    relaxation: float = 0.5
    max_iterations: int = 200
    predictor: Predictor = Predictor.APPENDIX

    def __post_init__(self):
        if not math.isfinite(self.k1) or self.k1 < 0:
            raise InvalidParametersError(f"k1 must be non-negative, got {self.k1}")
        if not math.isfinite(self.k2) or self.k2 <= 0:
            raise InvalidParametersError(f"k2 must be positive, got {self.k2}")
        if not math.isfinite(self.t_max_control) or self.t_max_control < 0:
            raise InvalidParametersError(
                f"t_max_control must be non-negative, got {self.t_max_control}"
            )
        if not math.isfinite(self.tol_percent) or self.tol_percent <= 0:
            raise InvalidParametersError(f"tol_percent must be positive, got {self.tol_percent}")
        if not 0 < self.relaxation <= 1:
            raise InvalidParametersError(f"relaxation must lie in (0, 1], got {self.relaxation}")
        if int(self.max_iterations) != self.max_iterations or self.max_iterations < 1:
            raise InvalidParametersError(
                f"max_iterations must be a positive integer, got {self.max_iterations}"
            )
        object.__setattr__(self, 'predictor', Predictor(self.predictor))


@dataclass(frozen=True)
class IterationRecord:
    iteration: int
    metric: float
    objective: float


@dataclass(frozen=True, eq=False)
class SweepResult:
    state: Trajectory
    costate: Trajectory
    control: ControlSignal
    iterations: int
    objective: float
    converged: bool
    metric: float
    history: tuple = field(default=(), repr=False)


def project(values, upper):
    """Clamp to the admissible box [0, upper]."""
    if upper < 0:
        raise InvalidParametersError(f"upper bound must be non-negative, got {upper}")
    return np.clip(np.asarray(values, dtype=float), 0.0, upper)


def extremal_control(p3, p4, infectious, k2, t_max):
    """Pointwise minimizer of the Hamiltonian, (p3 - p4) I / (2 k2), projected."""
    if k2 <= 0:
        raise InvalidParametersError(f"k2 must be positive, got {k2}")
    p3, p4, infectious = (np.asarray(a, dtype=float) for a in (p3, p4, infectious))
    if not p3.shape == p4.shape == infectious.shape:
        raise GridMismatchError("co-state and state arrays differ in length")
    return project((p3 - p4) * infectious / (2 * k2), t_max)


def objective(state, control, k1, k2):
    """Composite trapezoid of k1 I + k2 T^2 on the state grid."""
    if state.grid != control.grid:
        raise GridMismatchError("state and control live on different grids")
    integrand = k1 * state.component('I') + k2 * control.values ** 2
    return float(trapezoid(integrand, state.times))


def convergence_metric(new_signals, old_signals):
    """
    Largest relative change across signals, in percent.

    Signals that vanish identically are skipped; DegenerateSignalError when
    none is left.
    """
    changes = []
    for new, old in zip(new_signals, old_signals):
        scale = np.max(np.abs(new))
        if scale < DEAD_SIGNAL:
            continue
        changes.append(np.max(np.abs(new - old)) / scale)
    if not changes:
        raise DegenerateSignalError("every signal vanished; the relative change is undefined")
    return 100.0 * float(max(changes))


def _signals(state, costate, control_values):
    return [*state.values, *costate.values, control_values]


def _check_initial_state(y0):
    total = y0.total
    if not math.isfinite(total) or abs(total - 1.0) > TOTAL_TOLERANCE:
        raise InvalidParametersError(f"initial fractions must sum to 1, got {total:.12g}")


def run_sweep(params, y0, grid, config=None, initial_control=None):
    """
    Iterate state solve, adjoint solve and relaxed control update until the
    percent change of every live signal drops to ``config.tol_percent``.

    Returns the last iterate; ``converged`` is False when ``max_iterations``
    ran out first.
    """
    config = config or SweepConfig()
    _check_initial_state(y0)
    if grid.alpha != params.alpha:
        raise GridMismatchError(f"grid order {grid.alpha} differs from model order {params.alpha}")

    upper = config.t_max_control
    if initial_control is None:
        control = ControlSignal.zeros(grid, upper=upper)
    else:
        if initial_control.grid != grid:
            raise GridMismatchError("initial control is defined on a different grid")
        control = ControlSignal(grid=grid, values=project(initial_control.values, upper), upper=upper)

    logger.info(
        f"Sweep: alpha={grid.alpha}, n={grid.n_points}, k1={config.k1}, k2={config.k2}, "
        f"T_max={upper}, tol={config.tol_percent}%"
    )
    zeros = np.zeros(4)
    previous = None
    history = []
    metric = math.inf
    converged = False

    for iteration in range(1, config.max_iterations + 1):
        state = solve_pece(state_field(params, control), y0.as_array(), grid, config.predictor)
        solved_objective = objective(state, control, config.k1, config.k2)
        costate = solve_pece(
            adjoint_field(params, state, control, config.k1), zeros, grid, config.predictor
        ).reversed()

        update = extremal_control(
            costate.component('p3'), costate.component('p4'), state.component('I'), config.k2, upper
        )
        relaxed = project(config.relaxation * update + (1 - config.relaxation) * control.values, upper)

        if previous is None:
            previous = [np.zeros(grid.n_points)] * 8
        metric = convergence_metric(
            _signals(state, costate, relaxed), [*previous, control.values]
        )
        history.append(IterationRecord(iteration=iteration, metric=metric, objective=solved_objective))
        logger.info(f"Iteration {iteration}: change={metric:.3e}%, J={solved_objective:.9f}")

        previous = [*state.values, *costate.values]
        control = ControlSignal(grid=grid, values=relaxed, upper=upper)
        if metric <= config.tol_percent:
            converged = True
            break

    if not converged:
        logger.warning(
            f"Sweep stopped after {config.max_iterations} iterations with change {metric:.3e}%"
        )

    return SweepResult(
        state=state,
        costate=costate,
        control=control,
        iterations=len(history),
        objective=solved_objective,
        converged=converged,
        metric=metric,
        history=tuple(history),
    )
