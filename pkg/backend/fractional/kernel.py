"""
Time grids and memory-weight coefficients for Caputo-sense quadratures.

Every product-integration rule in the solvers reads its history weights
from one of the two families below. Weights depend only on (alpha, n), so
one instance serves every state component and every sweep iteration.
"""
from dataclasses import dataclass, field

import numpy as np
from scipy.special import gamma as gamma_function

from .exceptions import InvalidGridError, InvalidOrderError


def check_order(alpha):
    """Raise InvalidOrderError unless 0 < alpha <= 1."""
    if not np.isfinite(alpha) or not 0.0 < alpha <= 1.0:
        raise InvalidOrderError(f"derivative order must lie in (0, 1], got {alpha}")


def gamma(x):
    """Gamma function; only ever called on [1, 3] here."""
    return float(gamma_function(x))


@dataclass(frozen=True)
class FractionalGrid:
    alpha: float
    t_final: float
    n_points: int
    nodes: np.ndarray = field(repr=False, compare=False)
    step: float

    def __post_init__(self):
        self.nodes.setflags(write=False)

    def __len__(self):
        return self.n_points


def make_grid(alpha, t_final, n_points):
    check_order(alpha)
    if int(n_points) != n_points or n_points < 2:
        raise InvalidGridError(f"a grid needs at least 2 points, got {n_points}")
    if not np.isfinite(t_final) or t_final <= 0:
        raise InvalidGridError(f"final time must be positive, got {t_final}")

    n_points = int(n_points)
    step = t_final / (n_points - 1)
    nodes = step * np.arange(n_points, dtype=float)
    return FractionalGrid(
        alpha=float(alpha),
        t_final=float(t_final),
        n_points=n_points,
        nodes=nodes,
        step=step,
    )


def refine_grid(grid, factor):
    """Fine grid whose every ``factor``-th node coincides with a node of ``grid``."""
    if int(factor) != factor or factor < 1:
        raise InvalidGridError(f"refinement factor must be a positive integer, got {factor}")
    return make_grid(grid.alpha, grid.t_final, (grid.n_points - 1) * int(factor) + 1)


@dataclass(frozen=True)
class RectWeights:
    """
    Left fractional rectangular weights b[k] = k^a - (k-1)^a, k = 1..n.

    Stored zero-based: ``weights[k - 1]`` is b[k]. The differences of the
    floating-point powers are exact, so prefix sums telescope to m^a.
    """
    alpha: float
    weights: np.ndarray = field(repr=False, compare=False)

    def __post_init__(self):
        self.weights.setflags(write=False)

    def __len__(self):
        return len(self.weights)

    def at(self, k):
        return float(self.weights[k - 1])

    def by_lag(self, j):
        """b[j], b[j-1], ..., b[1]: the weights for nodes 0..j-1 seen from node j."""
        return self.weights[j - 1::-1]


@dataclass(frozen=True)
class TrapWeights:
    """
    Product-trapezoid corrector weights
    a[k] = (k+1)^(a+1) - 2 k^(a+1) + (k-1)^(a+1), k = 1..n.
    """
    alpha: float
    weights: np.ndarray = field(repr=False, compare=False)

    def __post_init__(self):
        self.weights.setflags(write=False)

    def __len__(self):
        return len(self.weights)

    def at(self, k):
        return float(self.weights[k - 1])

    def by_lag(self, j):
        """a[j-1], ..., a[1]: the weights for nodes 1..j-1 seen from node j."""
        if j < 2:
            return self.weights[:0]
        return self.weights[j - 2::-1]

    def head(self, j):
        """Weight of the first node in the corrector at step j >= 1."""
        alpha = self.alpha
        return (j - 1) ** (alpha + 1) - (j - 1 - alpha) * j ** alpha


def rect_weights(alpha, n):
    check_order(alpha)
    if n < 1:
        raise InvalidGridError(f"weight count must be at least 1, got {n}")
    powers = np.arange(n + 1, dtype=float) ** alpha
    return RectWeights(alpha=float(alpha), weights=np.diff(powers))


def trap_weights(alpha, n):
    check_order(alpha)
    if n < 1:
        raise InvalidGridError(f"weight count must be at least 1, got {n}")
    powers = np.arange(n + 2, dtype=float) ** (alpha + 1)
    first_differences = np.diff(powers)
    return TrapWeights(alpha=float(alpha), weights=np.diff(first_differences))
