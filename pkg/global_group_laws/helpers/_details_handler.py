"""
Global Group Laws: Details Handler Module

Collects fields of many regularity reports, as produced by a sweep, into
numpy arrays so that a batch can be summarised at once.

Functions
---------
gather_verdicts(reports)
    Column vector of 1 (pass) and 0 (fail).
summarize_reports(reports)
    Counts of passes, certified passes and failures.

Example
-------
>>> gather_verdicts(reports)
array([[1],
       [0]])
"""

# Third-party library imports
import numpy as np

# Local application/library specific imports
from ..regularity import RegularityReport


def gather_verdicts(reports: list):
    """Return a [Q-by-1] array of verdicts, or None for an empty list."""
    values = [[1 if report.passed else 0] for report in reports if isinstance(report, RegularityReport)]
    return np.vstack(values) if values else None


def summarize_reports(reports: list) -> dict:
    verdicts = gather_verdicts(reports)
    if verdicts is None:
        return {'checks': 0, 'passed': 0, 'certified': 0, 'failed': 0}
    certified = np.array([[1 if r.passed and r.certified else 0] for r in reports])
    return {
        'checks': int(verdicts.shape[0]),
        'passed': int(verdicts.sum()),
        'certified': int(certified.sum()),
        'failed': int(verdicts.shape[0] - verdicts.sum()),
    }
