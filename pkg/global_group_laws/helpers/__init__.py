"""
Global Group Laws Helper Functions

These are internal library helper functions.
"""

from ._options import ComputeOptions, OptionsError
from ._receipt import OperationReceipt, summarize_input
from ._router import TaskType, determine_task_type

from ._payload_handler import compare_fixture
from ._payload_handler import construct
from ._payload_handler import deconstruct
from ._payload_handler import to_payload

from ._details_handler import gather_verdicts
from ._details_handler import summarize_reports
