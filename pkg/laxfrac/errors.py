from enum import Enum
from typing import Any, Optional


class Decision(str, Enum):
    """Three-valued outcome of a bounded decision procedure."""

    YES = "yes"
    NO = "no"
    UNDETERMINED = "undetermined"

    @classmethod
    def of(cls, value: bool) -> "Decision":
        return cls.YES if value else cls.NO


class LaxFractionsError(Exception):
    """Base class for every error raised by the engine"""
    pass


class BoundaryError(LaxFractionsError):
    """Cells, squares or cospans whose boundaries do not chain"""
    pass


class NotASquare(LaxFractionsError):
    """A candidate square that does not commute up to an invertible 2-cell"""
    pass


class PreconditionError(LaxFractionsError):
    """The hypothesis of an axiom or rule is not met by its input"""
    pass


class BoundExhausted(LaxFractionsError):
    """A bounded witness search ran out of candidates.

    Never a counterexample claim: retrying with a larger bound is legitimate.
    """

    def __init__(self, message: str, bound: int, instance: Any = None):
        super().__init__(f"{message} (bound={bound})")
        self.bound = bound
        self.instance = instance


class NotReplaceable(LaxFractionsError):
    """A step names a region that is not a replaceable sub-square of the scheme"""
    pass


class NotFound(LaxFractionsError):
    """An exhaustive search over a finite model found nothing"""
    pass


class NotLocalizable(LaxFractionsError):
    """The classical calculus-of-fractions axioms fail; carries the violating witness"""

    def __init__(self, message: str, axiom: str, witness: Any = None):
        super().__init__(f"{axiom}: {message}")
        self.axiom = axiom
        self.witness = witness


class SpecError(LaxFractionsError):
    """Invalid finite poset or finite category specification"""
    pass


class ModelFileError(SpecError):
    """Parse or validation failure in a model file, positioned where possible"""

    def __init__(self, message: str, path: Optional[str] = None,
                 line: Optional[int] = None, column: Optional[int] = None):
        self.path = path
        self.line = line
        self.column = column
        location = path or "<model>"
        if line is not None:
            location = f"{location}:{line}:{column or 1}"
        super().__init__(f"{location}: {message}")
