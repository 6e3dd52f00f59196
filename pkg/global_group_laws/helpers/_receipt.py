"""
Global Group Laws: Operation Receipt Module

A receipt records which operation ran, a short summary of its inputs and
how long it took. Timed operations return one next to their result when
called with `return_receipt=True`.
"""

# Standard library imports
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Dict


def summarize_input(value) -> str:
    """Short text for one argument of an operation."""
    label = getattr(value, 'law_id', None) or getattr(value, 'label', None)
    if label is not None and not callable(label):
        return str(label)
    if isinstance(value, (list, tuple)):
        if len(value) > 4:
            return f"[{len(value)} items]"
        return '[' + ', '.join(summarize_input(v) for v in value) + ']'
    text = str(value)
    return text if len(text) <= 60 else text[:57] + '...'


@dataclass(frozen=True)
class OperationReceipt:
    """Name, input summary and duration of one timed call."""

    operation: str
    inputs: Dict[str, str]
    duration: float
    finished_at: str = field(default_factory=lambda: datetime.now(timezone.utc).isoformat(timespec='seconds'))

    def to_json_dict(self) -> dict:
        return {'operation': self.operation, 'inputs': dict(self.inputs),
                'duration': round(self.duration, 6), 'finished_at': self.finished_at}

    def __str__(self):
        return f"{self.operation} finished in {self.duration:.3f}s"
