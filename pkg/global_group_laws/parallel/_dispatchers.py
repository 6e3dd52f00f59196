"""
Global Group Laws: Dispatcher Module for parallel task execution

Each dispatcher unpacks one argument tuple for its worker, so the thread
pool can map a single callable over a list of tuples.

Available Dispatcher Functions:
    - dispatch_exactness_task
    - dispatch_regularity_task
"""

from ._workers import _exactness_worker, _regularity_worker


def dispatch_exactness_task(args):
    """
    Dispatches one exactness check to _exactness_worker.

    Parameters
    ----------
    args : tuple
        (q, law, group, V, bound).

    Returns
    -------
    tuple
        (q, RegularityReport).
    """

    return _exactness_worker(*args)


def dispatch_regularity_task(args):
    """Dispatches one (q, law, group, chars, bound) tuple to _regularity_worker."""

    return _regularity_worker(*args)
