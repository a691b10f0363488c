"""Exception hierarchy shared by the ring, series and Tate layers."""


class TatecalcError(Exception):
    """Base class for all errors raised by tatecalc."""


class RingMismatchError(TatecalcError, ValueError):
    pass


class DegreeMismatchError(TatecalcError, ValueError):
    pass


class HomogeneityError(TatecalcError, ValueError):
    """A polynomial term does not have the declared degree."""


class GradingError(TatecalcError, ValueError):
    """A series coefficient violates deg(coefficient at n) = D + n."""


class ClassTableError(TatecalcError, IndexError):
    """A projective class was requested beyond the configured table."""


class NotAUnitError(TatecalcError, ValueError):
    pass


class ValuationError(TatecalcError, ValueError):
    pass


class PrecisionError(TatecalcError, ValueError):
    """The requested coefficient lies beyond the known truncation order."""


class CharacteristicError(TatecalcError, ValueError):
    """The operation is undefined in the ring's characteristic."""


class SchemaError(TatecalcError, ValueError):
    """Malformed JSON input."""
