# analytics/models.py
from dataclasses import dataclass
from pathlib import Path

from fractional.kernel import make_grid, refine_grid
from fractional.solvers import Predictor


@dataclass(frozen=True)
class RunConfig:
    """Validated description of one command-line run."""

    SIMULATE = 'simulate'
    COMPARE = 'compare'
    FOCP = 'focp'
    EQUILIBRIUM = 'equilibrium'
    SCENARIOS = (SIMULATE, COMPARE, FOCP, EQUILIBRIUM)

    scenario: str
    params: object
    preset: str = 'florida-default'
    method: str = 'pece'
    n_points: int = 400
    t_final: float = 5.0
    output_dir: Path = Path('output')
    predictor: Predictor = Predictor.APPENDIX
    refine: int = 4
    sweep: object = None

    def __post_init__(self):
        if self.scenario not in self.SCENARIOS:
            raise ValueError(f"unknown scenario {self.scenario!r}")
        if self.scenario == self.FOCP and self.sweep is None:
            raise ValueError("the focp scenario needs a sweep configuration")

    @property
    def alpha(self):
        return self.params.alpha

    @property
    def grid(self):
        return make_grid(self.params.alpha, self.t_final, self.n_points)

    @property
    def reference_grid(self):
        return refine_grid(self.grid, self.refine)
