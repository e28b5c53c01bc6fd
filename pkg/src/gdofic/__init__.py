"""Exact GDoF region calculator and numerical validator for the 2-user
MIMO Gaussian interference channel."""

from .core_math import WeightedDim, f, g, pos_part, rat
from .region import (
    AntennaProfile,
    ExponentProfile,
    GdofBound,
    GdofRegion,
    build_region,
    contains,
    reciprocal,
    region_of,
    regions_equal,
    sweep_alpha,
    symmetric_gdof,
    region_bounds,
)
from .closed_forms import (
    RegimeLabel,
    alpha_star,
    classify_regime,
    closed_form_d,
    curve_1121,
    dof_region,
    dof_sum_bound,
    siso_w_curve,
    zf_only_region,
)
from .hk_scheme import (
    ChannelInstance,
    CovariancePair,
    DofSplit,
    SplitInfeasible,
    covariances,
    sample_instance,
    split_solver,
    stream_decomposition,
)
from .finite_snr import (
    SlopeEstimate,
    SnrLadder,
    estimate_slope,
    mac_slope,
    mac_sum_rate,
    p2p_rate,
    sample_channel,
    tin_rates,
    tin_slopes,
)

__version__ = "0.1.0"
