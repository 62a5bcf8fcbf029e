# analytics/exporters.py
import logging
from pathlib import Path

import pandas as pd

from fractional.exceptions import GridMismatchError

logger = logging.getLogger('analytics')

# nine significant digits whatever the magnitude
FLOAT_FORMAT = '%.8e'


def trajectory_frame(trajectory, control=None, costate=None):
    """One column per signal, time first: t, S, E, I, R[, T, p1..p4]."""
    columns = {'t': trajectory.times}
    columns.update(zip(trajectory.names, trajectory.values))
    if control is not None:
        if control.grid != trajectory.grid:
            raise GridMismatchError("control signal is defined on a different grid")
        columns['T'] = control.values
    if costate is not None:
        if costate.grid != trajectory.grid:
            raise GridMismatchError("co-state is defined on a different grid")
        columns.update(zip(costate.names, costate.values))
    return pd.DataFrame(columns)


def write_trajectory_csv(trajectory, path, control=None, costate=None):
    path = Path(path)
    frame = trajectory_frame(trajectory, control=control, costate=costate)
    frame.to_csv(path, index=False, float_format=FLOAT_FORMAT, lineterminator='\n', encoding='utf-8')
    logger.info(f"Wrote {len(frame)} rows to {path}")
    return path


def read_trajectory_csv(path):
    """Read a CSV written by write_trajectory_csv back into a DataFrame."""
    return pd.read_csv(Path(path), dtype=float, encoding='utf-8')
