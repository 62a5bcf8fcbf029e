import numpy as np
import pytest
from hypothesis import HealthCheck, given, settings, strategies as st
from numpy.testing import assert_allclose

from analytics.exporters import read_trajectory_csv, write_trajectory_csv
from epidemic.dynamics import state_field
from epidemic.models import COSTATE_LABELS, STATE_LABELS, ControlSignal
from epidemic.presets import FLORIDA_DEFAULT, PUBLISHED_INITIAL_STATE
from fractional.exceptions import GridMismatchError
from fractional.kernel import make_grid
from fractional.solvers import Trajectory, solve_pece

# h = 0.01 keeps the explicit schemes inside their stability region for the Florida rates
SHORT_GRID = make_grid(0.995, 1.0, 101)


def zero_trajectory(n_points=2, t_final=5.0):
    grid = make_grid(0.995, t_final, n_points)
    return Trajectory(grid=grid, values=np.zeros((4, n_points)), labels=STATE_LABELS)


def published_run():
    return solve_pece(state_field(FLORIDA_DEFAULT), PUBLISHED_INITIAL_STATE.as_array(), SHORT_GRID)


def test_two_node_file_layout(tmp_path):
    path = write_trajectory_csv(zero_trajectory(), tmp_path / 'zero.csv')
    assert path.read_bytes().decode('utf-8') == (
        't,S,E,I,R\n'
        '0.00000000e+00,0.00000000e+00,0.00000000e+00,0.00000000e+00,0.00000000e+00\n'
        '5.00000000e+00,0.00000000e+00,0.00000000e+00,0.00000000e+00,0.00000000e+00\n'
    )


def test_first_row_is_the_initial_state(tmp_path):
    path = write_trajectory_csv(published_run(), tmp_path / 'pece.csv')
    lines = path.read_text().splitlines()
    assert lines[1] == '0.00000000e+00,4.26282000e-01,1.09566000e-02,2.75076000e-02,5.35254000e-01'
    assert [float(value) for value in lines[1].split(',')] == [0.0, 0.426282, 0.0109566, 0.0275076, 0.535254]
    assert len(lines) == 102


def test_control_and_costate_columns(tmp_path):
    state = zero_trajectory(n_points=3)
    costate = Trajectory(grid=state.grid, values=np.ones((4, 3)), labels=COSTATE_LABELS)
    control = ControlSignal(grid=state.grid, values=[0.0, 0.5, 1.0], upper=1.0)
    path = write_trajectory_csv(state, tmp_path / 'focp.csv', control=control, costate=costate)
    assert path.read_text().splitlines()[0] == 't,S,E,I,R,T,p1,p2,p3,p4'
    assert_allclose(read_trajectory_csv(path)['T'], [0.0, 0.5, 1.0])


def test_control_grid_must_match(tmp_path):
    control = ControlSignal.zeros(make_grid(0.995, 5.0, 3))
    with pytest.raises(GridMismatchError):
        write_trajectory_csv(zero_trajectory(), tmp_path / 'bad.csv', control=control)


def test_repeated_writes_are_identical(tmp_path):
    first = write_trajectory_csv(published_run(), tmp_path / 'a.csv').read_bytes()
    second = write_trajectory_csv(published_run(), tmp_path / 'b.csv').read_bytes()
    assert first == second


def test_missing_directory_is_an_io_error(tmp_path):
    with pytest.raises(OSError):
        write_trajectory_csv(zero_trajectory(), tmp_path / 'missing' / 'zero.csv')


def test_small_magnitudes_keep_their_digits(tmp_path):
    grid = make_grid(0.995, 5.0, 2)
    values = np.array([[1.234567891e-6, 3.3e-11], [0.004, 0.0], [0.5, 1.0], [-2.5e-7, 7.0e-3]])
    trajectory = Trajectory(grid=grid, values=values, labels=STATE_LABELS)
    frame = read_trajectory_csv(write_trajectory_csv(trajectory, tmp_path / 'small.csv'))
    assert_allclose(frame[list(STATE_LABELS)].to_numpy().T, values, rtol=1e-8, atol=0)


@settings(max_examples=30, suppress_health_check=[HealthCheck.function_scoped_fixture])
@given(st.lists(
    st.floats(min_value=-1.0, max_value=1.0, allow_subnormal=False), min_size=8, max_size=8,
))
def test_round_trip(tmp_path, values):
    grid = make_grid(0.995, 5.0, 2)
    trajectory = Trajectory(grid=grid, values=np.array(values).reshape(4, 2), labels=STATE_LABELS)
    frame = read_trajectory_csv(write_trajectory_csv(trajectory, tmp_path / 'round.csv'))
    assert list(frame.columns) == ['t', 'S', 'E', 'I', 'R']
    assert_allclose(frame[list(STATE_LABELS)].to_numpy().T, trajectory.values, rtol=1e-8, atol=0)
    assert_allclose(frame['t'], grid.nodes, rtol=1e-8, atol=0)
