import logging

import numpy as np
from scipy.optimize import bisect

from fractional.exceptions import InvalidParametersError, NoEndemicRootError
from .dynamics import state_field
from .models import SeirsState

logger = logging.getLogger('epidemic')


def endemic_equilibrium(params):
    """
    Endemic fixed point of the unforced, uncontrolled model.

    S* is closed-form; I* is the root of the remaining balance in [0, 1].
    """
    if not params.is_autonomous:
        raise InvalidParametersError("the equilibrium needs b1 = c1 = 0")

    mu, nu, gamma_r, epsilon = params.mu_a, params.nu_a, params.gamma_a, params.epsilon_a
    beta = params.b0_a
    recruitment = params.mu_a
    if epsilon <= 0 or mu + gamma_r <= 0:
        raise NoEndemicRootError("epsilon and mu + gamma must be positive")

    susceptible = (mu + epsilon) * (mu + nu) / (epsilon * beta)

    def residual(infectious):
        return (
            recruitment
            - mu * susceptible
            - beta * susceptible * infectious
            + gamma_r * nu * infectious / (mu + gamma_r)
        )

    low, high = residual(0.0), residual(1.0)
    if not (low > 0 and high < 0):
        raise NoEndemicRootError(
            f"no sign change on [0, 1]: residual(0)={low:.6g}, residual(1)={high:.6g}"
        )

    infectious = bisect(residual, 0.0, 1.0, xtol=1e-15)
    state = SeirsState(
        S=susceptible,
        E=beta * susceptible * infectious / (mu + epsilon),
        I=infectious,
        R=nu * infectious / (mu + gamma_r),
    )
    logger.info(f"Endemic equilibrium: {state}")
    return state


def field_residual(params, state):
    """Max-norm of the uncontrolled right-hand side at ``state`` (t = 0)."""
    value = state_field(params).evaluate(0.0, state.as_array())
    return float(np.max(np.abs(value)))
