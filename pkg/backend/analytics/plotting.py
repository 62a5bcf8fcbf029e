# analytics/plotting.py
import logging
from pathlib import Path

import pandas as pd
from django.template.loader import render_to_string

from fractional.exceptions import UnknownColumnError

logger = logging.getLogger('analytics')

TEMPLATE = 'analytics/plot.gp'


def _csv_columns(path):
    return list(pd.read_csv(path, nrows=0).columns)


def emit_plot_script(csv_paths, columns, out_path, title=None):
    """
    Render a gnuplot script drawing ``columns`` of every CSV against t.

    Several CSVs give an overlay: each curve is labelled with its file stem.
    """
    if isinstance(csv_paths, (str, Path)):
        csv_paths = [csv_paths]
    csv_paths = [Path(path) for path in csv_paths]
    columns = list(columns)
    if not columns:
        raise UnknownColumnError("no columns selected for plotting")

    overlay = len(csv_paths) > 1
    curves = []
    for path in csv_paths:
        header = _csv_columns(path)
        for column in columns:
            if column == header[0] or column not in header:
                raise UnknownColumnError(f"column {column!r} is not in {path.name}")
            label = f"{column}(t)"
            if overlay:
                label = f"{label} {path.stem}"
            # gnuplot counts columns from 1
            curves.append({'path': path.as_posix(), 'index': header.index(column) + 1, 'label': label})

    out_path = Path(out_path)
    script = render_to_string(TEMPLATE, {
        'title': title or ', '.join(f"{column}(t)" for column in columns),
        'ylabel': 'population fraction' if 'T' not in columns else 'value',
        'image': out_path.with_suffix('.png').name,
        'curves': curves,
    })
    out_path.write_text(script, encoding='utf-8')
    logger.info(f"Wrote plot script {out_path} ({len(curves)} curves)")
    return out_path
