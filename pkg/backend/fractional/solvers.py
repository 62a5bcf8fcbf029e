"""
Caputo-sense fractional initial value problem integrators.

Both solvers work on the equivalent Volterra form
y(t) = y0 + I^alpha f(t, y(t)) and differ only in the quadrature used for
the fractional integral: the explicit fractional Euler method uses the left
rectangular rule, the PECE method predicts with it and corrects with the
product trapezoidal rule.
"""
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field as dataclass_field
from enum import Enum

import numpy as np

from .exceptions import GridMismatchError, InvalidGridError, NonFiniteStateError
from .kernel import gamma, make_grid, rect_weights, trap_weights

logger = logging.getLogger('fractional')


class VectorField(ABC):
    """Right-hand side f(t, y) of a fractional IVP of dimension ``dimension``."""

    dimension = 1
    labels = None

    def check_grid(self, grid):
        """Hook for fields carrying node-indexed data; called once per solve."""

    @abstractmethod
    def evaluate(self, t, y, node=None):
        """Return f(t, y); ``node`` is the grid index of ``t`` when solving."""

    def __call__(self, t, y, node=None):
        return self.evaluate(t, y, node)


class FunctionField(VectorField):
    """Adapter turning a plain callable ``func(t, y)`` into a VectorField."""

    def __init__(self, dimension, func, labels=None):
        if dimension < 1:
            raise ValueError(f"dimension must be at least 1, got {dimension}")
        self.dimension = int(dimension)
        self.func = func
        self.labels = tuple(labels) if labels else None

    def evaluate(self, t, y, node=None):
        return np.asarray(self.func(t, y), dtype=float).reshape(self.dimension)


@dataclass(frozen=True, eq=False)
class Trajectory:
    """State (or co-state) values on a grid, one row per component."""
    grid: object
    values: np.ndarray = dataclass_field(repr=False, compare=False)
    labels: tuple = None

    def __post_init__(self):
        if self.values.ndim != 2 or self.values.shape[1] != self.grid.n_points:
            raise GridMismatchError(
                f"values of shape {self.values.shape} do not fit a grid of {self.grid.n_points} points"
            )
        if self.labels is not None and len(self.labels) != self.values.shape[0]:
            raise ValueError(f"{len(self.labels)} labels for {self.values.shape[0]} components")
        self.values.setflags(write=False)

    @property
    def dimension(self):
        return self.values.shape[0]

    @property
    def times(self):
        return self.grid.nodes

    @property
    def names(self):
        if self.labels:
            return tuple(self.labels)
        return tuple(f"y{i + 1}" for i in range(self.dimension))

    def component(self, key):
        """Row by label or by index."""
        if isinstance(key, str):
            try:
                key = self.names.index(key)
            except ValueError:
                raise KeyError(key) from None
        return self.values[key]

    def total(self):
        return self.values.sum(axis=0)

    def reversed(self):
        """Same grid, node order reversed (t' = t_final - t)."""
        return Trajectory(grid=self.grid, values=self.values[:, ::-1].copy(), labels=self.labels)

    def downsample(self, factor):
        """Keep every ``factor``-th node; the coarse grid must align node-for-node."""
        factor = int(factor)
        if factor < 1 or (self.grid.n_points - 1) % factor:
            raise InvalidGridError(
                f"cannot downsample {self.grid.n_points} points by a factor of {factor}"
            )
        coarse = make_grid(self.grid.alpha, self.grid.t_final, (self.grid.n_points - 1) // factor + 1)
        return Trajectory(grid=coarse, values=self.values[:, ::factor].copy(), labels=self.labels)


class Predictor(str, Enum):
    # Listing-compatible: past terms weighted by b[lag + 1] plus a lag-0 term
    # evaluated on the not-yet-computed node slot, which still holds zeros.
    APPENDIX = 'appendix'
    # Rectangular weights by lag over nodes 0..j-1.
    LAGGED = 'lagged'


@dataclass(frozen=True)
class ComponentNorms:
    label: str
    l1: float
    l2: float
    linf: float


def _initial_state(field, y0, grid):
    y0 = np.asarray(y0, dtype=float).reshape(-1)
    if y0.shape[0] != field.dimension:
        raise ValueError(
            f"initial condition has {y0.shape[0]} components, field expects {field.dimension}"
        )
    if not np.all(np.isfinite(y0)):
        raise NonFiniteStateError(0, "initial condition is not finite")
    field.check_grid(grid)
    return y0


def _evaluate(field, t, y, node):
    value = np.asarray(field.evaluate(t, y, node), dtype=float)
    if value.shape != (field.dimension,) or not np.all(np.isfinite(value)):
        raise NonFiniteStateError(node, f"field evaluation at step {node} (t={t:.6g}) is not finite")
    return value


def _trajectory(field, grid, values):
    return Trajectory(grid=grid, values=values, labels=field.labels)


def solve_euler(field, y0, grid):
    """
    Explicit fractional forward Euler:
    y_j = y0 + h^a / Gamma(1+a) * sum_{k<j} b[j-k] f(t_k, y_k).
    """
    y0 = _initial_state(field, y0, grid)
    n = grid.n_points
    nodes = grid.nodes
    logger.debug(f"Euler solve: alpha={grid.alpha}, n={n}, d={field.dimension}")

    rect = rect_weights(grid.alpha, n)
    scale = grid.step ** grid.alpha / gamma(1 + grid.alpha)

    values = np.zeros((field.dimension, n))
    history = np.zeros((field.dimension, n))
    values[:, 0] = y0
    history[:, 0] = _evaluate(field, nodes[0], y0, 0)

    for j in range(1, n):
        values[:, j] = y0 + scale * (history[:, :j] @ rect.by_lag(j))
        if not np.all(np.isfinite(values[:, j])):
            raise NonFiniteStateError(j)
        history[:, j] = _evaluate(field, nodes[j], values[:, j], j)

    return _trajectory(field, grid, values)


def solve_pece(field, y0, grid, predictor=Predictor.APPENDIX):
    """
    Adams-Bashforth-Moulton predict-evaluate-correct-evaluate scheme.

    The corrector is
    y_j = y0 + h^a / Gamma(2+a) * (f(t_j, y_p) + head(j) f_0 + sum_{k=1}^{j-1} a[j-k] f_k)
    with f_k cached once per accepted node.

    The default APPENDIX predictor also evaluates f(t_j, 0), so fields that are
    singular at y = 0 need Predictor.LAGGED.
    """
    predictor = Predictor(predictor)
    y0 = _initial_state(field, y0, grid)
    n = grid.n_points
    nodes = grid.nodes
    alpha = grid.alpha
    logger.debug(
        f"PECE solve: alpha={alpha}, n={n}, d={field.dimension}, predictor={predictor.value}"
    )

    rect = rect_weights(alpha, n)
    trap = trap_weights(alpha, n)
    predict_scale = grid.step ** alpha / gamma(1 + alpha)
    correct_scale = grid.step ** alpha / gamma(2 + alpha)

    values = np.zeros((field.dimension, n))
    history = np.zeros((field.dimension, n))
    values[:, 0] = y0
    history[:, 0] = _evaluate(field, nodes[0], y0, 0)

    for j in range(1, n):
        if predictor is Predictor.APPENDIX:
            memory = history[:, :j] @ rect.weights[j:0:-1]
            memory = memory + rect.at(1) * _evaluate(field, nodes[j], values[:, j], j)
        else:
            memory = history[:, :j] @ rect.by_lag(j)
        predicted = y0 + predict_scale * memory
        if not np.all(np.isfinite(predicted)):
            raise NonFiniteStateError(j)

        corrector_sum = (
            _evaluate(field, nodes[j], predicted, j)
            + trap.head(j) * history[:, 0]
            + history[:, 1:j] @ trap.by_lag(j)
        )
        values[:, j] = y0 + correct_scale * corrector_sum
        if not np.all(np.isfinite(values[:, j])):
            raise NonFiniteStateError(j)
        history[:, j] = _evaluate(field, nodes[j], values[:, j], j)

    return _trajectory(field, grid, values)


def diff_norms(a, b):
    """L1, L2 and max norms of a - b per component, keyed by component name."""
    if a.grid != b.grid or a.dimension != b.dimension:
        raise GridMismatchError(
            f"cannot compare a {a.dimension}x{a.grid.n_points} trajectory "
            f"with a {b.dimension}x{b.grid.n_points} one"
        )
    difference = np.abs(a.values - b.values)
    return {
        name: ComponentNorms(
            label=name,
            l1=float(row.sum()),
            l2=float(np.sqrt(np.sum(row ** 2))),
            linf=float(row.max()),
        )
        for name, row in zip(a.names, difference)
    }
