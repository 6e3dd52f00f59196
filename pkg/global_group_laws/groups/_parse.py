"""
Global Group Laws: Group Syntax Module

Parses the group and character strings accepted on the command line:
"1", "T", "T^r", "C2^r", "C<n>" and "T^r / [V1; V2; ...]" for groups,
"2,-3" for characters and "2,0;0,2" for character lists.
"""

# Standard library imports
import re
from typing import List

# Local application/library specific imports
from ..exceptions import GroupSyntaxError
from ._groups import Character, Family, GroupSpec, cyclic, elem2, quotient, torus, trivial_group

_TORUS = re.compile(r'^T(?:\^(\d+))?$')
_ELEM2 = re.compile(r'^C2\^(\d+)$')
_CYCLIC = re.compile(r'^C(\d+)$')
_QUOTIENT = re.compile(r'^T(?:\^(\d+))?\s*/\s*\[(.*)\]$')


def parse_group(text: str, family: Family = Family.TORI) -> GroupSpec:
    """Parse a group string.

    "C2" is read as C2^1 in the F2 family and as the quotient T / [2]
    otherwise.
    """
    spec = text.strip()
    if spec == '1':
        return trivial_group(family)
    match = _QUOTIENT.match(spec)
    if match:
        rank = int(match.group(1) or 1)
        chars = [_parse_entries(part, rank) for part in match.group(2).split(';') if part.strip()]
        return quotient(rank, chars)
    match = _TORUS.match(spec)
    if match:
        return torus(int(match.group(1) or 1))
    match = _ELEM2.match(spec)
    if match:
        return elem2(int(match.group(1)))
    match = _CYCLIC.match(spec)
    if match:
        n = int(match.group(1))
        if n == 2 and family is Family.ELEM2:
            return elem2(1)
        return cyclic(n)
    raise GroupSyntaxError(
        f"groups:parse_group:cannot read group '{text}' (expected 1, T^r, C2^r, C<n> or 'T^r / [V1; V2]')")


def _parse_entries(text: str, rank: int) -> Character:
    try:
        entries = tuple(int(v) for v in text.replace(' ', '').split(',') if v != '')
    except ValueError as err:
        raise GroupSyntaxError(f"groups:parse_character:'{text}' is not a list of integers") from err
    if len(entries) != rank:
        raise GroupSyntaxError(f"groups:parse_character:'{text}' has {len(entries)} entries, expected {rank}")
    return Character(entries)


def parse_character(text: str, group: GroupSpec) -> Character:
    V = _parse_entries(text, group.rank)
    return Character(V.entries, group.modulus)


def parse_characters(text: str, group: GroupSpec) -> List[Character]:
    return [parse_character(part, group) for part in text.split(';') if part.strip()]
