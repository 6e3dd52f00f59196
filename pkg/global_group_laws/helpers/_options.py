"""
Global Group Laws: Compute Options Module

Holds the numeric knobs shared by the operations and the command line:
series truncation, flag depth, Lazard degree bound, monomial search bound
and the number of worker threads for sweeps.

Values are resolved in the order explicit argument, environment variable,
default. The environment variables are

    GGL_TRUNCATION, GGL_DEPTH, GGL_DEGREE, GGL_BOUND, GGL_JOBS

Example
-------
>>> options = ComputeOptions(depth=4)
>>> options.options['depth']
4
>>> options.bound
3
"""

# Standard library imports
import logging
import os
from typing import Optional

# Local application/library specific imports
from ..exceptions import GGLError

logger = logging.getLogger(__name__)


class OptionsError(GGLError, ValueError):
    """An option or its environment override is out of range."""


# name -> (environment variable, default, smallest allowed value)
_OPTION_TABLE = {
    'truncation': ('GGL_TRUNCATION', 8, 1),
    'depth': ('GGL_DEPTH', 6, 1),
    'degree': ('GGL_DEGREE', 6, 2),
    'bound': ('GGL_BOUND', 3, 0),
    'jobs': ('GGL_JOBS', 1, 1),
}


def _from_env(name: str) -> Optional[int]:
    variable, _, _ = _OPTION_TABLE[name]
    raw = os.getenv(variable)
    if raw is None or raw.strip() == '':
        return None
    try:
        return int(raw)
    except ValueError as err:
        raise OptionsError(f"helpers:ComputeOptions:{variable}='{raw}' is not an integer") from err


class ComputeOptions:
    """Numeric options of a computation.

    Parameters
    ----------
    truncation : int, optional
        Series truncation for complete laws built from a TruncatedFGL.
    depth : int, optional
        Flag depth for completions and flag expansions.
    degree : int, optional
        Degree bound N of the Lazard desk.
    bound : int, optional
        Monomial search bound of the regularity checks.
    jobs : int, optional
        Worker threads used by the sweeps.

    Raises
    ------
    OptionsError
        When a value, explicit or from the environment, is below its minimum.
    """

    def __init__(self, truncation: Optional[int] = None, depth: Optional[int] = None,
                 degree: Optional[int] = None, bound: Optional[int] = None,
                 jobs: Optional[int] = None):
        explicit = {'truncation': truncation, 'depth': depth, 'degree': degree, 'bound': bound, 'jobs': jobs}
        self.options = {}
        for name, value in explicit.items():
            self.options[name] = self._resolve(name, value)

    @staticmethod
    def _resolve(name: str, value: Optional[int]) -> int:
        variable, default, minimum = _OPTION_TABLE[name]
        source = 'argument'
        if value is None:
            value = _from_env(name)
            source = variable
        if value is None:
            return default
        value = int(value)
        if value < minimum:
            raise OptionsError(f"helpers:ComputeOptions:{name} from {source} must be at least {minimum}, got {value}")
        return value

    def __getattr__(self, name):
        # only reached for names not found normally
        options = self.__dict__.get('options', {})
        if name in options:
            return options[name]
        raise AttributeError(name)

    def replace(self, **changes) -> 'ComputeOptions':
        """A copy with some options set explicitly; None keeps the current value."""
        merged = dict(self.options)
        merged.update({k: v for k, v in changes.items() if v is not None})
        return ComputeOptions(**merged)

    def __eq__(self, other):
        return isinstance(other, ComputeOptions) and self.options == other.options

    def __repr__(self):
        inner = ', '.join(f"{k}={v}" for k, v in self.options.items())
        return f"ComputeOptions({inner})"
