"""
Global Group Laws: Law Selectors Module

Turns the short law names used on the command line into law objects:
'mult', 'add', '2tor-add' and 'fgl:<path to TruncatedFGL JSON>'.
"""

# Standard library imports
import json
import logging
import os
from typing import Optional

# Local application/library specific imports
from ..exceptions import GroupSyntaxError, InvalidFGL, NotARingMap
from ..kernel import CoefficientRing, TruncatedFGL
from ._additive import additive_law, two_torsion_additive_law
from ._base import GlobalLaw
from ._complete import from_fgl
from ._coordinates import base_change
from ._multiplicative import multiplicative_law

logger = logging.getLogger(__name__)

LAW_NAMES = ('mult', 'add', '2tor-add', 'fgl:<file>')


def load_fgl(path: str) -> TruncatedFGL:
    """Read a TruncatedFGL from its JSON file."""
    if not os.path.isfile(path):
        raise InvalidFGL(f"laws:load_fgl:no such file {path}")
    with open(path, 'r', encoding='utf-8') as handle:
        try:
            payload = json.load(handle)
        except json.JSONDecodeError as err:
            raise InvalidFGL(f"laws:load_fgl:{path} is not JSON ({err.msg})") from err
    try:
        return TruncatedFGL.from_json_dict(payload)
    except (KeyError, TypeError) as err:
        raise InvalidFGL(f"laws:load_fgl:{path} is missing the field {err}") from err


def parse_law(text: str, ring: Optional[CoefficientRing] = None, truncation: Optional[int] = None) -> GlobalLaw:
    """Build the law named by `text` over `ring` (default Z).

    An FGL file carries its own ground ring; a different `ring` base-changes it.
    """
    text = text.strip()
    if text == 'mult':
        return multiplicative_law(ring or CoefficientRing.integers())
    if text == 'add':
        return additive_law(ring or CoefficientRing.integers())
    if text == '2tor-add':
        law = two_torsion_additive_law()
        if ring is not None and ring != law.ring:
            raise NotARingMap(f"laws:parse_law:the 2-torsion additive law lives over F2, not {ring.label}")
        return law
    if text.startswith('fgl:'):
        law = from_fgl(load_fgl(text[4:]), truncation)
        if ring is not None and ring != law.ring:
            law = base_change(law, ring)
        logger.debug(f"laws:parse_law:loaded {law.law_id} from {text[4:]}")
        return law
    raise GroupSyntaxError(f"laws:parse_law:unknown law '{text}', expected one of {', '.join(LAW_NAMES)}")
