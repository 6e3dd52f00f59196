"""
Global Group Laws: Exceptions Module

Every error raised by the library derives from `GGLError`. Errors that
describe malformed or incompatible values additionally derive from
`ValueError`, so callers that only know the standard hierarchy still
catch them.

Messages follow the "module:function:message" shape so that a failing
check can be traced back to the operation that produced it.
"""


class GGLError(Exception):
    """Base class for all library errors."""


class RingMismatch(GGLError, ValueError):
    """Operands live over different coefficient rings or variable counts."""


class DimensionMismatch(GGLError, ValueError):
    """Vector or matrix shapes do not fit together."""


class NotDivisible(GGLError, ArithmeticError):
    """No exact quotient exists over the coefficient ring."""


class NotAUnit(GGLError, ArithmeticError):
    """An element that must be invertible is not."""


class CompositionError(GGLError, ValueError):
    """A series substituted into another has a nonzero constant term."""


class FamilyMismatch(GGLError, ValueError):
    """A torus-family object was combined with an elementary 2-group object, or vice versa."""


class GroupSyntaxError(GGLError, ValueError):
    """A group, character, law or element string could not be parsed."""


class ZeroCharacter(GGLError, ValueError):
    """An operation that needs a nonzero character received the trivial one."""


class DependentCharacters(GGLError, ValueError):
    """A tuple of characters that must be linearly independent is not."""


class NotARingMap(GGLError, ValueError):
    """There is no ring map between the requested coefficient rings."""


class PsiUnavailable(GGLError):
    """The psi factorization is undefined or one of its divisions failed."""


class UndecidablePresentation(GGLError):
    """An equality or membership question cannot be decided in the given presentation."""


class InvalidFGL(GGLError, ValueError):
    """Truncated formal group law data violates the group law axioms."""


class NotStrict(GGLError, ValueError):
    """A coordinate change unit does not restrict to 1 at the trivial group."""
