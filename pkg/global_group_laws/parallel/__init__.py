"""
Initialization module for the parallel package.

Re-exports the sweep runners from the threaded_sweeps module.
"""


from ._threaded_sweeps import (
    run_exactness_sweep,
    run_regularity_sweep
)
