"""
Global Group Laws: Laws

The global law interface, the concrete multiplicative, additive,
2-torsion additive and complete laws, coordinate and base change, and
the Kan extension to quotient presentations.
"""

from ._presentations import (
    LaurentPresentation,
    PolynomialPresentation,
    Presentation,
    TruncatedPresentation,
    default_names,
)
from ._base import GlobalLaw, LawElement
from ._multiplicative import MultiplicativeLaw, multiplicative_law
from ._additive import AdditiveLaw, TwoTorsionAdditiveLaw, additive_law, two_torsion_additive_law
from ._complete import CompleteLaw, from_fgl
from ._coordinates import CoordinateChangedLaw, base_change
from ._kan import check_lift_independence, kan_restrict, kan_value, same_underlying_map
from ._selectors import LAW_NAMES, load_fgl, parse_law
