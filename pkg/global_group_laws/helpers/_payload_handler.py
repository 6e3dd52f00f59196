"""
Global Group Laws: Payload Handler Module

Builds the JSON payloads written by the command line and compares output
against stored fixtures.

Functions Overview
------------------
- to_payload(obj):
    Converts results (laws elements, reports, expansions, numpy arrays)
    into plain JSON-ready structures.
- construct(**data):
    Canonical JSON text: sorted keys, fixed separators, trailing newline.
- deconstruct(json_payload):
    Decodes a JSON payload string into a dictionary.
- compare_fixture(text, path):
    Unified diff between produced output and a stored fixture file.
"""

# Standard library imports
import difflib
import json
import logging
import os
from typing import List

# Third-party library imports
import numpy as np

logger = logging.getLogger(__name__)


def to_payload(obj):
    """JSON-ready form of a result."""
    if hasattr(obj, 'to_json_dict'):
        return to_payload(obj.to_json_dict())
    if isinstance(obj, np.ndarray):
        return [to_payload(v) for v in obj.tolist()]
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, dict):
        return {str(k): to_payload(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_payload(v) for v in obj]
    if obj is None or isinstance(obj, (bool, int, float, str)):
        return obj
    return str(obj)


def construct(**data) -> str:
    """Canonical JSON of the keyword arguments."""
    payload = {name: to_payload(value) for name, value in data.items()}
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + '\n'


def deconstruct(json_payload: str):
    if json_payload is None:
        return None
    return json.loads(json_payload)


def compare_fixture(text: str, path: str) -> List[str]:
    """Lines of a unified diff from the fixture at `path` to `text`; empty when equal.

    Raises
    ------
    FileNotFoundError
        When the fixture does not exist.
    """
    if not os.path.isfile(path):
        raise FileNotFoundError(f"helpers:compare_fixture:no fixture at {path}")
    with open(path, 'r', encoding='utf-8') as handle:
        expected = handle.read()
    if expected == text:
        return []
    diff = list(difflib.unified_diff(expected.splitlines(keepends=True), text.splitlines(keepends=True),
                                     fromfile=path, tofile='output'))
    logger.info(f"helpers:compare_fixture:{path} differs in {len(diff)} diff lines")
    # whitespace at the end of the file only
    return diff or [f"--- {path}\n", "+++ output\n", "trailing whitespace differs\n"]
