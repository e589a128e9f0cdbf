"""Exception hierarchy shared by every module of the package."""


class AlgebraError(Exception):
    """Base class for all errors raised by bchfactor."""


class DegreeError(AlgebraError, ValueError):
    """An argument does not have the filtration degree an operation needs."""


class TruncationMismatch(AlgebraError, ValueError):
    """Two operands live in differently truncated (or different) algebras."""


class PoleOverflow(AlgebraError, ArithmeticError):
    """A Laurent product needs a pole of higher order than the cap allows."""


class DegreeOverflow(AlgebraError, ArithmeticError):
    """A result would exceed the representable polynomial degree."""


class FlagError(AlgebraError):
    """An operator lacks a (verified) property the operation relies on."""


class MembershipError(AlgebraError, ValueError):
    """An argument is not in the image of the projector it was claimed to be in."""


class NotCharacter(AlgebraError, ValueError):
    """A functional that should be a character is not multiplicative."""


class TargetMismatch(AlgebraError, ValueError):
    """Functionals with different target rings were combined."""


class NonConvergence(AlgebraError, RuntimeError):
    """A fixed-point iteration failed to become stationary."""


class NotLieError(AlgebraError, ValueError):
    """A polynomial was rendered in bracket form but is not a Lie element."""
