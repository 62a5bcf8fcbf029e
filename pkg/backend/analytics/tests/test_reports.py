import numpy as np
import pytest

from analytics.reports import compare_report
from epidemic.dynamics import state_field
from epidemic.models import STATE_LABELS
from epidemic.presets import FLORIDA_DEFAULT, PUBLISHED_INITIAL_STATE
from fractional.exceptions import GridMismatchError
from fractional.kernel import make_grid, refine_grid
from fractional.solvers import Trajectory, solve_euler, solve_pece

# Published accuracy tables: rows are norms 1, 2, inf; columns S, E, I, R.
PUBLISHED = {
    'euler': {
        '1': (3.89849, 0.297874, 0.776241, 3.8815),
        '2': (0.221838, 0.0196, 0.0512966, 0.22177),
        'inf': (0.0197738, 0.00285878, 0.00745357, 0.019802),
    },
    'pece': {
        '1': (0.191041, 0.0162465, 0.0415721, 0.18758),
        '2': (0.0115686, 0.00106802, 0.00269032, 0.0113171),
        'inf': (0.00133593, 0.000135793, 0.000322856, 0.00128548),
    },
}


def trajectory(values):
    values = np.asarray(values, dtype=float)
    return Trajectory(grid=make_grid(0.995, 1.0, values.shape[1]), values=values, labels=STATE_LABELS)


def test_identical_runs_give_zero_tables():
    run = trajectory(np.arange(12).reshape(4, 3))
    report = compare_report(run, run, run)
    assert np.all(report.frame()[list(STATE_LABELS)].to_numpy() == 0.0)


def test_renderings():
    reference = trajectory(np.zeros((4, 2)))
    shifted = trajectory([[3.0, -4.0]] * 4)
    report = compare_report(shifted, reference, reference)
    assert report.value('euler', '1', 'S') == pytest.approx(7.0)
    assert report.value('euler', '2', 'E') == pytest.approx(5.0)
    assert report.value('euler', 'inf', 'R') == pytest.approx(4.0)
    assert report.value('pece', 'inf', 'I') == 0.0

    text = report.to_text()
    assert 'euler vs reference' in text and 'pece vs reference' in text
    lines = report.to_csv().splitlines()
    assert lines[0] == 'method,norm,S,E,I,R'
    assert len(lines) == 7


def test_grids_must_agree():
    with pytest.raises(GridMismatchError):
        compare_report(trajectory(np.zeros((4, 2))), trajectory(np.zeros((4, 3))), trajectory(np.zeros((4, 2))))


@pytest.mark.slow
def test_reproduces_published_tables():
    grid = make_grid(0.995, 5.0, 400)
    field = state_field(FLORIDA_DEFAULT)
    y0 = PUBLISHED_INITIAL_STATE.as_array()
    reference = solve_pece(field, y0, refine_grid(grid, 4)).downsample(4)
    report = compare_report(solve_euler(field, y0, grid), solve_pece(field, y0, grid), reference)

    for method, rows in PUBLISHED.items():
        for norm, published in rows.items():
            for name, expected in zip(STATE_LABELS, published):
                value = report.value(method, norm, name)
                assert expected / 3 <= value <= expected * 3, (method, norm, name, value)
    for norm in PUBLISHED['euler']:
        for name in STATE_LABELS:
            assert report.value('euler', norm, name) > report.value('pece', norm, name)
