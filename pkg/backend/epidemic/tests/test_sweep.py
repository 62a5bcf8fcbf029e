import numpy as np
import pytest
from hypothesis import given, strategies as st
from numpy.testing import assert_allclose, assert_array_equal

from epidemic.dynamics import state_field
from epidemic.models import STATE_LABELS, ControlSignal, SeirsState
from epidemic.presets import FLORIDA_DEFAULT, PUBLISHED_INITIAL_STATE
from epidemic.sweep import (
    SweepConfig, convergence_metric, extremal_control, objective, project, run_sweep,
)
from fractional.exceptions import DegenerateSignalError, GridMismatchError, InvalidParametersError
from fractional.kernel import make_grid
from fractional.solvers import Trajectory, solve_pece

DEFAULT_GRID = make_grid(0.995, 5.0, 400)


def constant_state(grid, infectious):
    values = np.zeros((4, grid.n_points))
    values[2] = infectious
    return Trajectory(grid=grid, values=values, labels=STATE_LABELS)


def uncontrolled():
    return solve_pece(state_field(FLORIDA_DEFAULT), PUBLISHED_INITIAL_STATE.as_array(), DEFAULT_GRID)


@pytest.fixture(scope='module')
def default_sweep():
    return run_sweep(FLORIDA_DEFAULT, PUBLISHED_INITIAL_STATE, DEFAULT_GRID, SweepConfig())


class TestProject:
    def test_clamps_to_box(self):
        assert_array_equal(project([-1.0, 0.5, 2.0], 1.0), [0.0, 0.5, 1.0])

    def test_values_in_box_are_unchanged(self):
        assert_array_equal(project([0.0, 0.25, 1.0], 1.0), [0.0, 0.25, 1.0])

    @given(
        st.lists(st.floats(min_value=-1e3, max_value=1e3), min_size=1, max_size=40),
        st.floats(min_value=0.0, max_value=10.0),
    )
    def test_idempotent(self, values, upper):
        once = project(values, upper)
        assert_array_equal(project(once, upper), once)
        assert np.all((once >= 0) & (once <= upper))


class TestExtremalControl:
    def test_equal_costates_give_no_treatment(self):
        p = np.array([0.3, 0.2, 0.1])
        assert_array_equal(extremal_control(p, p, np.full(3, 0.5), 0.001, 1.0), np.zeros(3))

    def test_no_infectious_gives_no_treatment(self):
        assert_array_equal(extremal_control([1.0, 2.0], [0.0, 0.0], [0.0, 0.0], 0.001, 1.0), [0.0, 0.0])

    def test_saturates_at_upper_bound(self):
        assert extremal_control([0.004], [0.0], [0.5], 0.001, 1.0)[0] == 1.0

    def test_interior_value(self):
        assert extremal_control([0.001], [0.0], [0.5], 0.001, 1.0)[0] == pytest.approx(0.25)

    def test_requires_positive_k2(self):
        with pytest.raises(InvalidParametersError):
            extremal_control([0.0], [0.0], [0.0], 0.0, 1.0)


class TestObjective:
    grid = make_grid(0.995, 5.0, 41)

    def test_zero(self):
        assert objective(constant_state(self.grid, 0.0), ControlSignal.zeros(self.grid), 1.0, 0.001) == 0.0

    def test_constant_infectious(self):
        value = objective(constant_state(self.grid, 1.0), ControlSignal.zeros(self.grid), 1.0, 0.001)
        assert value == pytest.approx(5.0)

    def test_constant_treatment(self):
        control = ControlSignal(grid=self.grid, values=np.full(41, 0.5), upper=1.0)
        value = objective(constant_state(self.grid, 0.0), control, 1.0, 0.001)
        assert value == pytest.approx(0.00125)

    def test_grid_mismatch(self):
        with pytest.raises(GridMismatchError):
            objective(constant_state(self.grid, 0.0), ControlSignal.zeros(make_grid(0.995, 5.0, 11)), 1.0, 0.001)


class TestConvergenceMetric:
    def test_percent_of_largest_relative_change(self):
        new = [np.array([1.0, 2.0]), np.array([10.0, 10.0])]
        old = [np.array([1.0, 1.9]), np.array([10.0, 10.0])]
        assert convergence_metric(new, old) == pytest.approx(5.0)

    def test_dead_signals_are_skipped(self):
        new = [np.zeros(3), np.array([4.0, 4.0, 4.0])]
        old = [np.ones(3), np.array([4.0, 4.0, 3.0])]
        assert convergence_metric(new, old) == pytest.approx(25.0)

    def test_all_signals_dead(self):
        with pytest.raises(DegenerateSignalError):
            convergence_metric([np.zeros(3), np.zeros(3)], [np.ones(3), np.ones(3)])


class TestSweepConfig:
    def test_defaults(self):
        config = SweepConfig()
        assert (config.k1, config.k2, config.t_max_control) == (1.0, 0.001, 1.0)
        assert (config.tol_percent, config.relaxation, config.max_iterations) == (0.001, 0.5, 200)

    @pytest.mark.parametrize('overrides', [
        {'k1': -1.0}, {'k2': 0.0}, {'t_max_control': -0.5}, {'tol_percent': 0.0},
        {'relaxation': 0.0}, {'relaxation': 1.5}, {'max_iterations': 0},
    ])
    def test_rejects_invalid_values(self, overrides):
        with pytest.raises(InvalidParametersError):
            SweepConfig(**overrides)


def test_initial_state_must_be_a_distribution():
    state = SeirsState(S=0.5, E=0.1, I=0.1, R=0.1)
    with pytest.raises(InvalidParametersError):
        run_sweep(FLORIDA_DEFAULT, state, make_grid(0.995, 1.0, 11))


def test_grid_order_must_match_model():
    with pytest.raises(GridMismatchError):
        run_sweep(FLORIDA_DEFAULT, PUBLISHED_INITIAL_STATE, make_grid(0.9, 1.0, 11))


@pytest.mark.slow
class TestDefaultSweep:
    def test_converges(self, default_sweep):
        assert default_sweep.converged
        assert default_sweep.iterations <= 200
        assert default_sweep.metric <= 0.001
        assert len(default_sweep.history) == default_sweep.iterations

    def test_treatment_lowers_cost_and_peak(self, default_sweep):
        baseline = uncontrolled()
        baseline_cost = objective(baseline, ControlSignal.zeros(DEFAULT_GRID), 1.0, 0.001)
        assert default_sweep.objective < baseline_cost
        assert default_sweep.state.component('I').max() < baseline.component('I').max()

    def test_control_stays_in_box(self, default_sweep):
        values = default_sweep.control.values
        assert np.all((values >= 0.0) & (values <= 1.0))

    def test_transversality(self, default_sweep):
        assert_array_equal(default_sweep.costate.values[:, -1], np.zeros(4))

    def test_objective_trend(self, default_sweep):
        costs = [record.objective for record in default_sweep.history]
        for previous, current in zip(costs[3:], costs[4:]):
            assert current <= previous * 1.01

    def test_control_follows_yearly_season(self, default_sweep):
        control = default_sweep.control.values - default_sweep.control.values.mean()
        per_year = round((DEFAULT_GRID.n_points - 1) / DEFAULT_GRID.t_final)

        def autocorrelation(lag):
            return float(np.dot(control[:-lag], control[lag:]) / (len(control) - lag))

        assert autocorrelation(per_year) > autocorrelation(per_year // 2)

    def test_result_is_a_fixed_point(self, default_sweep):
        rerun = run_sweep(
            FLORIDA_DEFAULT, PUBLISHED_INITIAL_STATE, DEFAULT_GRID,
            SweepConfig(max_iterations=1), initial_control=default_sweep.control,
        )
        new, old = rerun.control.values, default_sweep.control.values
        change = 100 * np.max(np.abs(new - old)) / np.max(np.abs(new))
        assert change <= 2 * default_sweep.metric + 1e-12


@pytest.mark.slow
def test_no_running_cost_means_no_treatment():
    result = run_sweep(FLORIDA_DEFAULT, PUBLISHED_INITIAL_STATE, DEFAULT_GRID, SweepConfig(k1=0.0))
    assert result.converged
    assert np.max(result.control.values) <= 1e-8
    assert_allclose(result.state.values, uncontrolled().values, atol=1e-10)


@pytest.mark.slow
def test_zero_bound_reproduces_uncontrolled_run():
    result = run_sweep(FLORIDA_DEFAULT, PUBLISHED_INITIAL_STATE, DEFAULT_GRID, SweepConfig(t_max_control=0.0))
    assert np.max(np.abs(result.state.values - uncontrolled().values)) <= 1e-12
    assert_array_equal(result.control.values, np.zeros(DEFAULT_GRID.n_points))
