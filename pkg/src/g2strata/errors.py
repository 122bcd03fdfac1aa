"""Exception types shared across the package."""


class G2StrataError(Exception):
    """Base class for all library errors."""


# -- field construction and arithmetic ---------------------------------------

class CompositeP(G2StrataError):
    """p is not prime."""


class WrongCharacteristic(G2StrataError):
    """Operation requires a different field characteristic."""


class ReducibleModulus(G2StrataError):
    """The defining polynomial factors over F_p."""


class UnsupportedSize(G2StrataError):
    """Field outside the supported range (registry or memory budget)."""


class DivisionByZero(G2StrataError):
    """Field inversion of zero."""


class NonResidue(G2StrataError):
    """Square root requested of a non-square."""


class NotASubfield(G2StrataError):
    """Embedding source is not a subfield of the target."""


class IndexOutOfRange(G2StrataError):
    """Element index outside [0, q)."""


# -- polynomials and invariant tables ----------------------------------------

class CtxMismatch(G2StrataError):
    """Operands live in different fields."""


class TableNotLoaded(G2StrataError):
    """Invariant table missing or malformed."""


# -- curves -------------------------------------------------------------------

class SingularCurve(G2StrataError):
    """Model has vanishing discriminant."""


class SingularPoint(G2StrataError):
    """Invariant point with J10 = 0 where a smooth point is required."""


class SingularMatrix(G2StrataError):
    """GL2 element with zero determinant."""


class ZeroG2(G2StrataError):
    """Constructor requires g2 != 0."""


class BadKind(G2StrataError):
    """Unknown family kind."""


# -- stratification -----------------------------------------------------------

class ConsistencyViolation(G2StrataError):
    """Two models of one moduli point classified differently (always a bug)."""


class IncompleteCoverage(G2StrataError):
    """Some invariant triple was never reached by the enumeration."""


class ShardMismatch(G2StrataError):
    """Partial tables from different fields cannot be merged."""


class TheoremViolation(G2StrataError):
    """A verified classification statement failed on computed data."""


class CorruptResultFile(G2StrataError):
    """Result file failed magic or checksum validation."""
