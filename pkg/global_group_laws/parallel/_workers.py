"""
Global Group Laws: Parallel Workers Module

Worker functions run by the sweep thread pool. Each worker evaluates one
check and returns its slice index together with the report, so the
runner can put results back in input order.

The available worker functions include:
    - _exactness_worker: one check_exact_sequence call.
    - _regularity_worker: one check_k_regular call.

For end-user use, please refer to the functions in the threaded_sweeps
module.
"""

# Standard library imports
import logging
from typing import Sequence, Tuple

# Local application/library specific imports
from ..groups import GroupSpec
from ..laws import GlobalLaw
from ..regularity import RegularityReport, check_exact_sequence, check_k_regular

logger = logging.getLogger(__name__)


def _exactness_worker(q: int, law: GlobalLaw, group: GroupSpec, V, bound: int) -> Tuple[int, RegularityReport]:
    """
    Executes check_exact_sequence for the q-th character of a sweep.

    Parameters
    ----------
    q : int
        Slice index of the character in the sweep input.
    law : GlobalLaw
    group : GroupSpec
    V : Character or sequence of int
    bound : int
        Monomial search bound.

    Returns
    -------
    tuple
        (q, report).
    """
    report = check_exact_sequence(law, group, V, bound)
    logger.debug(f"parallel:_exactness_worker:slice {q} -> {report.verdict}")
    return q, report


def _regularity_worker(q: int, law: GlobalLaw, group: GroupSpec, chars: Sequence,
                       bound: int) -> Tuple[int, RegularityReport]:
    """Executes check_k_regular for the q-th character tuple of a sweep."""
    report = check_k_regular(law, chars, bound, group)
    logger.debug(f"parallel:_regularity_worker:slice {q} -> {report.verdict}")
    return q, report
