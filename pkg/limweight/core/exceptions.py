from typing import Optional


class LimweightError(Exception):
    """Base class of every error raised by limweight"""


class ParseError(LimweightError):
    def __init__(self, message: str, position: Optional[int] = None, text: str = ""):
        self.position = position
        self.text = text
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"{message}{where}")


class MixedGenericTags(LimweightError):
    """Arithmetic left the single-tag scalar model"""


class NotDominant(LimweightError):
    pass


class NotInBasis(LimweightError):
    pass


class InvalidBorel(LimweightError):
    pass


class RankTooSmall(LimweightError):
    pass


class NotFiniteDimensional(LimweightError):
    pass


class NotCommuting(LimweightError):
    pass


class HypothesisViolated(LimweightError):
    pass


class NotSemiInfinite(LimweightError):
    pass


class NotSignVector(LimweightError):
    pass


class UndecidableDescriptor(LimweightError):
    pass


class IncomparableCartan(LimweightError):
    pass


class NotIntegrable(LimweightError):
    pass


class NotSimpleBounded(LimweightError):
    pass
