"""
Global Group Laws: Single Verb Execution Module

Executes one command-line verb: resolves the options, builds the law
named by --law/--ring and hands both to the verb's worker.

Usage:
------
>>> result = run_verb(args)
>>> print(result.text)
"""

# Standard library imports
import logging

# Local application/library specific imports
from ..helpers import ComputeOptions
from ..kernel import CoefficientRing
from ..laws import parse_law

# Import single verb workers
from ._workers import (
    VerbResult,
    change_coord_verb,
    classify_verb,
    decompose_verb,
    euler_verb,
    exact_check_verb,
    fgl_verb,
    fixed_points_verb,
    flag_expand_verb,
    gamma_verb,
    kan_verb,
    lazard_relations_verb,
    nseries_verb,
    psi_verb,
    regular_check_verb,
)

logger = logging.getLogger(__name__)

# Maps each verb to its worker
_VERB_MAP = {
    'euler': euler_verb,
    'psi': psi_verb,
    'exact-check': exact_check_verb,
    'regular-check': regular_check_verb,
    'decompose': decompose_verb,
    'flag-expand': flag_expand_verb,
    'fgl': fgl_verb,
    'nseries': nseries_verb,
    'gamma': gamma_verb,
    'change-coord': change_coord_verb,
    'fixed-points': fixed_points_verb,
    'kan': kan_verb,
    'lazard-relations': lazard_relations_verb,
    'classify': classify_verb,
}

VERBS = tuple(_VERB_MAP)

# verbs that never read --law
_LAWLESS = {'lazard-relations'}


def _options(args) -> ComputeOptions:
    return ComputeOptions(truncation=getattr(args, 'truncation', None), depth=args.depth,
                          degree=args.degree, bound=args.bound, jobs=args.jobs)


def run_verb(args) -> VerbResult:
    """
    Entry point for executing one verb.

    Parameters
    ----------
    args : argparse.Namespace
        Parsed command line; `args.verb` selects the worker.

    Returns
    -------
    VerbResult
    """
    worker = _VERB_MAP.get(args.verb)
    if worker is None:
        raise ValueError(f"bin:run_verb:unknown verb '{args.verb}'")
    options = _options(args)
    law = None
    lawless = args.verb in _LAWLESS or (args.verb == 'classify' and getattr(args, 'random', None) is not None)
    if not lawless:
        ring = CoefficientRing.parse(args.ring) if args.ring else None
        law = parse_law(args.law, ring, options.truncation if args.law.startswith('fgl:') else None)
    logger.debug(f"bin:run_verb:{args.verb} with {law} and {options}")
    return worker(law, args, options)
