"""
Global Group Laws: Threaded Sweeps Module

Runs many independent exactness or regularity checks on a thread pool.
Every check is pure, so the only coordination needed is restoring the
input order of the reports, which the workers make possible by returning
their slice index.

Available Functions
-------------------
- `run_exactness_sweep`: check_exact_sequence for each character of a
  list, at one group or at one group per character.
- `run_regularity_sweep`: check_k_regular for each tuple of characters.

Dispatcher Map
--------------
`_DISPATCHER_MAP` routes a sweep kind to the dispatcher that unpacks its
argument tuples.
"""

# Standard library imports
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from typing import List, Sequence, Union

# Local application/library specific imports
from ..groups import Family, GroupSpec, elem2, torus
from ..helpers import ComputeOptions, OperationReceipt, summarize_input
from ..laws import GlobalLaw
from ..regularity import RegularityReport
from ._dispatchers import dispatch_exactness_task, dispatch_regularity_task

logger = logging.getLogger(__name__)

EXACTNESS = 'exactness'
REGULARITY = 'regularity'

_DISPATCHER_MAP = {
    EXACTNESS: dispatch_exactness_task,
    REGULARITY: dispatch_regularity_task,
}


def _run_tasks(kind: str, inputs: list, jobs: int) -> List[RegularityReport]:
    dispatcher = _DISPATCHER_MAP.get(kind)
    if dispatcher is None:
        raise ValueError(f"parallel:_run_tasks:invalid sweep kind: {kind}")
    if jobs <= 1 or len(inputs) <= 1:
        results = [dispatcher(args) for args in inputs]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(dispatcher, inputs))
    results.sort(key=lambda item: item[0])
    return [report for _, report in results]


def _receipt(operation: str, inputs: dict, start_time: float) -> OperationReceipt:
    return OperationReceipt(operation, {k: summarize_input(v) for k, v in inputs.items()}, time.time() - start_time)


def run_exactness_sweep(law: GlobalLaw, groups: Union[GroupSpec, Sequence[GroupSpec]], chars: Sequence,
                        bound: int = None, jobs: int = None, return_receipt: bool = False):
    """
    Entry point for running many exactness checks.

    Parameters
    ----------
    law : GlobalLaw
    groups : GroupSpec or list of GroupSpec
        One group for all characters, or one group per character.
    chars : list
        Characters, as Character objects or integer tuples.
    bound : int, optional
        Monomial search bound (ComputeOptions default when None).
    jobs : int, optional
        Worker threads (ComputeOptions default when None).

    Returns
    -------
    list of RegularityReport
        In the order of `chars`; with return_receipt also an OperationReceipt.
    """
    start_time = time.time()
    options = ComputeOptions(bound=bound, jobs=jobs)
    group_list = [groups] * len(chars) if isinstance(groups, GroupSpec) else list(groups)
    if len(group_list) != len(chars):
        raise ValueError(f"parallel:run_exactness_sweep:{len(group_list)} groups for {len(chars)} characters")
    inputs = [(q, law, group_list[q], V, options.bound) for q, V in enumerate(chars)]
    reports = _run_tasks(EXACTNESS, inputs, options.jobs)
    logger.debug(f"parallel:run_exactness_sweep:{len(reports)} checks on {options.jobs} threads")
    if return_receipt:
        return reports, _receipt('run_exactness_sweep', {'law': law, 'chars': list(chars)}, start_time)
    return reports


def run_regularity_sweep(law: GlobalLaw, pairs: Sequence[Sequence], bound: int = None, jobs: int = None,
                         group: GroupSpec = None, return_receipt: bool = False):
    """
    Entry point for running check_k_regular over many character tuples.

    Parameters
    ----------
    law : GlobalLaw
    pairs : list of sequences of characters
        Each entry is one tuple (V_1, ..., V_l) to test.
    bound, jobs : int, optional
    group : GroupSpec, optional
        Group of the characters; the torus (or C2^r) of their rank by default.

    Returns
    -------
    list of RegularityReport
        In input order; with return_receipt also an OperationReceipt.
    """
    start_time = time.time()
    options = ComputeOptions(bound=bound, jobs=jobs)
    inputs = []
    for q, chars in enumerate(pairs):
        target = group
        if target is None:
            first = chars[0]
            rank = first.rank if hasattr(first, 'rank') else len(first)
            target = elem2(rank) if law.family is Family.ELEM2 else torus(rank)
        inputs.append((q, law, target, list(chars), options.bound))
    reports = _run_tasks(REGULARITY, inputs, options.jobs)
    logger.debug(f"parallel:run_regularity_sweep:{len(reports)} checks on {options.jobs} threads")
    if return_receipt:
        return reports, _receipt('run_regularity_sweep', {'law': law, 'pairs': list(pairs)}, start_time)
    return reports
