"""
Global Group Laws: Router Module

Classifies exactness and regularity requests by the shape of their
character input, the way a batch is told apart from a single check
before it is handed to the sweep runner.

A single character is one exactness check; a list of characters is a
sweep of independent exactness checks; a list of character tuples is a
sweep of k-regularity checks.
"""

# Standard library imports
from enum import Enum
from typing import Sequence

# Local application/library specific imports
from ..exceptions import DimensionMismatch
from ..groups import Character


class TaskType(Enum):
    SINGLE = 'single'
    MULTI_CHAR = 'multi_char'
    MULTI_TUPLE = 'multi_tuple'


def _is_character(value) -> bool:
    if isinstance(value, Character):
        return True
    return isinstance(value, (list, tuple)) and all(isinstance(v, int) for v in value)


def _length(value) -> int:
    return value.rank if isinstance(value, Character) else len(value)


def determine_task_type(chars, rank: int) -> TaskType:
    """Decide how a character input is executed.

    Parameters
    ----------
    chars : Character, sequence of int, or sequence of those, or
        sequence of sequences of those
    rank : int
        Rank of the group the characters belong to.

    Returns
    -------
    TaskType

    Raises
    ------
    DimensionMismatch
        When a character has the wrong number of entries or the input is empty.
    """
    if _is_character(chars):
        _check(chars, rank)
        return TaskType.SINGLE
    if not isinstance(chars, Sequence) or len(chars) == 0:
        raise DimensionMismatch("helpers:determine_task_type:no characters given")
    if all(_is_character(V) for V in chars):
        for V in chars:
            _check(V, rank)
        return TaskType.MULTI_CHAR
    for block in chars:
        if not isinstance(block, Sequence) or not block or not all(_is_character(V) for V in block):
            raise DimensionMismatch(f"helpers:determine_task_type:cannot read {block!r} as characters")
        for V in block:
            _check(V, rank)
    return TaskType.MULTI_TUPLE


def _check(V, rank: int):
    if _length(V) != rank:
        raise DimensionMismatch(
            f"helpers:determine_task_type:character {tuple(V.entries) if isinstance(V, Character) else tuple(V)} "
            f"has {_length(V)} entries, the group has rank {rank}")
