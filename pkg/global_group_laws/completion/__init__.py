"""
Global Group Laws: Completion

Flag expansions, augmentations, the completion of a global law at a group
and strict coordinate changes.
"""

from ._flags import (
    Flag,
    FlagExpansion,
    default_flag,
    flag_expand,
    gamma_coefficients,
    reassemble,
    theta_eval,
    unit_criterion,
    y_class,
)
from ._completed import DEFAULT_DEPTH, CompletedFGL, completed_fgl, n_series
from ._strict import (
    StrictIso,
    change_coordinate,
    completion_series,
    expansion_series,
    random_fgl,
    strict_iso,
    unit_series_of_inverse,
)
