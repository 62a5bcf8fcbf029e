import math
from dataclasses import replace

from fractional.exceptions import UnknownPresetError
from .models import SeirsParams, SeirsState

# Florida RSV parameters (rates per year) with the fitted derivative order.
FLORIDA_DEFAULT = SeirsParams(
    mu=0.0113,
    nu=36.0,
    gamma_r=1.8,
    epsilon=91.0,
    b0=85.0,
    b1=0.167,
    c1=0.167,
    phi=math.pi / 2,
    alpha=0.995,
)

PRESETS = {
    'florida-default': FLORIDA_DEFAULT,
    'florida-classical': replace(FLORIDA_DEFAULT, alpha=1.0),
    'florida-autonomous': FLORIDA_DEFAULT.autonomous(),
}

# Endemic state the published runs start from.
PUBLISHED_INITIAL_STATE = SeirsState(S=0.426282, E=0.0109566, I=0.0275076, R=0.535254)


def get_preset(name):
    try:
        return PRESETS[name]
    except KeyError:
        raise UnknownPresetError(
            f"no parameter preset named {name!r}; choose from {', '.join(sorted(PRESETS))}"
        ) from None
