"""
Right-hand sides of the dimension-corrected SEIRS-alpha model.

The state field integrates forward in time. The adjoint field integrates
the co-state system in reversed time t' = t_final - t, against reversed
copies of S, I, the treatment and beta, so that the terminal conditions
p_i(t_final) = 0 become zero initial conditions.
"""
import logging

import numpy as np

from fractional.exceptions import GridMismatchError
from fractional.solvers import VectorField
from .models import COSTATE_LABELS, STATE_LABELS

logger = logging.getLogger('epidemic')


def forcing_beta(params, t):
    """Seasonal transmission b0^a (1 + b1 cos(2 pi t + phi))."""
    return params.b0_a * (1 + params.b1 * np.cos(2 * np.pi * t + params.phi))


def forcing_lambda(params, t):
    """Seasonal recruitment mu^a (1 + c1 cos(2 pi t + phi))."""
    return params.mu_a * (1 + params.c1 * np.cos(2 * np.pi * t + params.phi))


def _node_index(grid, t, node):
    if node is not None:
        return node
    index = int(round(t / grid.step))
    if not 0 <= index < grid.n_points or abs(grid.nodes[index] - t) > 1e-9 * max(1.0, abs(t)):
        raise GridMismatchError(f"t={t} is not a node of the control grid")
    return index


class SeirsField(VectorField):
    """SEIRS-alpha dynamics, with treatment moving I to R when a control is given."""

    dimension = 4
    labels = STATE_LABELS

    def __init__(self, params, control=None):
        self.params = params
        self.control = control

    def check_grid(self, grid):
        if grid.alpha != self.params.alpha:
            raise GridMismatchError(
                f"grid order {grid.alpha} differs from model order {self.params.alpha}"
            )
        if self.control is not None and self.control.grid != grid:
            raise GridMismatchError("control signal is defined on a different grid")

    def treatment(self, t, node=None):
        if self.control is None:
            return 0.0
        return float(self.control.values[_node_index(self.control.grid, t, node)])

    def evaluate(self, t, y, node=None):
        p = self.params
        S, E, I, R = y
        treatment = self.treatment(t, node)
        infection = forcing_beta(p, t) * S * I
        return np.array([
            forcing_lambda(p, t) - p.mu_a * S - infection + p.gamma_a * R,
            infection - (p.mu_a + p.epsilon_a) * E,
            p.epsilon_a * E - (p.mu_a + p.nu_a + treatment) * I,
            p.nu_a * I - p.mu_a * R - p.gamma_a * R + treatment * I,
        ])


class AdjointField(VectorField):
    """Negated co-state right-hand sides in reversed time."""

    dimension = 4
    labels = COSTATE_LABELS

    def __init__(self, params, state, control, k1):
        if state.grid != control.grid:
            raise GridMismatchError("state and control live on different grids")
        if k1 < 0:
            raise ValueError(f"k1 must be non-negative, got {k1}")
        self.params = params
        self.k1 = float(k1)
        self.grid = state.grid
        self.susceptible = state.component('S')[::-1].copy()
        self.infectious = state.component('I')[::-1].copy()
        self.treatment = control.values[::-1].copy()
        self.beta = forcing_beta(params, state.grid.nodes)[::-1].copy()

    def check_grid(self, grid):
        if grid != self.grid:
            raise GridMismatchError("adjoint data is defined on a different grid")

    def evaluate(self, t, y, node=None):
        p = self.params
        j = _node_index(self.grid, t, node)
        p1, p2, p3, p4 = y
        beta, S, I, T = self.beta[j], self.susceptible[j], self.infectious[j], self.treatment[j]
        return -np.array([
            p1 * (p.mu_a + beta * I) - beta * I * p2,
            p2 * (p.mu_a + p.epsilon_a) - p.epsilon_a * p3,
            -self.k1 + beta * p1 * S - p2 * beta * S + p3 * (p.mu_a + p.nu_a + T) - p4 * (p.nu_a + T),
            -p.gamma_a * p1 + p4 * (p.mu_a + p.gamma_a),
        ])


def state_field(params, control=None):
    return SeirsField(params, control)


def adjoint_field(params, state, control, k1):
    return AdjointField(params, state, control, k1)
