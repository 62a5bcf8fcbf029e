import math
from dataclasses import dataclass, field, replace

import numpy as np

from fractional.exceptions import InvalidParametersError
from fractional.kernel import check_order

STATE_LABELS = ('S', 'E', 'I', 'R')
COSTATE_LABELS = ('p1', 'p2', 'p3', 'p4')


@dataclass(frozen=True)
class SeirsParams:
    """Epidemiological and seasonal-forcing constants (rates per year)."""
    mu: float
    nu: float
    gamma_r: float
    epsilon: float
    b0: float
    b1: float
    c1: float
    phi: float
    alpha: float

    def __post_init__(self):
        check_order(self.alpha)
        for name in ('mu', 'nu', 'gamma_r', 'epsilon'):
            value = getattr(self, name)
            if not math.isfinite(value) or value < 0:
                raise InvalidParametersError(f"{name} must be a non-negative rate, got {value}")
        if not math.isfinite(self.b0) or self.b0 <= 0:
            raise InvalidParametersError(f"b0 must be positive, got {self.b0}")
        for name in ('b1', 'c1'):
            value = getattr(self, name)
            if not 0 <= value < 1:
                raise InvalidParametersError(f"{name} must lie in [0, 1), got {value}")
        if not math.isfinite(self.phi):
            raise InvalidParametersError(f"phi must be finite, got {self.phi}")

    # Dimension-corrected rates: every rate constant carries the power alpha.
    @property
    def mu_a(self):
        return self.mu ** self.alpha

    @property
    def nu_a(self):
        return self.nu ** self.alpha

    @property
    def gamma_a(self):
        return self.gamma_r ** self.alpha

    @property
    def epsilon_a(self):
        return self.epsilon ** self.alpha

    @property
    def b0_a(self):
        return self.b0 ** self.alpha

    @property
    def is_autonomous(self):
        return self.b1 == 0 and self.c1 == 0

    def autonomous(self):
        """Same model with the seasonal forcing removed."""
        return replace(self, b1=0.0, c1=0.0)

    def with_alpha(self, alpha):
        return replace(self, alpha=alpha)


@dataclass(frozen=True)
class SeirsState:
    """Population fractions."""
    S: float
    E: float
    I: float
    R: float

    @classmethod
    def from_array(cls, values):
        S, E, I, R = (float(v) for v in np.asarray(values, dtype=float).reshape(4))
        return cls(S=S, E=E, I=I, R=R)

    def as_array(self):
        return np.array([self.S, self.E, self.I, self.R])

    @property
    def total(self):
        return self.S + self.E + self.I + self.R


@dataclass(frozen=True, eq=False)
class ControlSignal:
    """Treatment rate on the grid nodes, bounded to [0, upper]."""
    grid: object
    values: np.ndarray = field(repr=False)
    upper: float = None

    def __post_init__(self):
        values = np.array(self.values, dtype=float)
        if values.shape != (self.grid.n_points,):
            raise InvalidParametersError(
                f"control has {values.size} values for a grid of {self.grid.n_points} points"
            )
        if np.any(values < 0) or (self.upper is not None and np.any(values > self.upper)):
            raise InvalidParametersError(f"control leaves the admissible box [0, {self.upper}]")
        values.setflags(write=False)
        object.__setattr__(self, 'values', values)

    @classmethod
    def zeros(cls, grid, upper=None):
        return cls(grid=grid, values=np.zeros(grid.n_points), upper=upper)
