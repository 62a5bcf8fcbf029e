# analytics/reports.py
from dataclasses import dataclass

import pandas as pd

from fractional.exceptions import GridMismatchError
from fractional.solvers import diff_norms

NORMS = (('1', 'l1'), ('2', 'l2'), ('inf', 'linf'))


@dataclass(frozen=True, eq=False)
class ComparisonReport:
    """Norms of (method - reference) per component: one 3x4 table per method."""
    tables: dict

    def frame(self):
        rows = []
        for method, table in self.tables.items():
            for norm in table.index:
                rows.append({'method': method, 'norm': norm, **table.loc[norm].to_dict()})
        return pd.DataFrame(rows)

    def to_text(self):
        blocks = []
        for method, table in self.tables.items():
            body = table.to_string(float_format=lambda value: f"{value:.6e}")
            blocks.append(f"{method} vs reference\n{body}")
        return '\n\n'.join(blocks) + '\n'

    def to_csv(self):
        return self.frame().to_csv(index=False, float_format='%.9e', lineterminator='\n')

    def value(self, method, norm, component):
        return float(self.tables[method].loc[norm, component])


def norm_table(trajectory, reference):
    norms = diff_norms(trajectory, reference)
    table = pd.DataFrame(
        {name: [getattr(norms[name], attr) for _, attr in NORMS] for name in trajectory.names},
        index=[label for label, _ in NORMS],
    )
    table.index.name = 'norm'
    return table


def compare_report(euler, pece, reference):
    if not euler.grid == pece.grid == reference.grid:
        raise GridMismatchError("comparison needs all three trajectories on one grid")
    return ComparisonReport(tables={
        'euler': norm_table(euler, reference),
        'pece': norm_table(pece, reference),
    })
