"""Exception types shared across the package."""


class WordforgeError(Exception):
    """Base class for all wordforge errors."""


class AlphabetError(WordforgeError):
    """Bad alphabet, unknown symbol, or operands over different alphabets."""


class EmptyWordError(WordforgeError):
    """An operation that requires a non-empty word received the empty word."""


class NotPrimitiveError(WordforgeError):
    """The operation is only defined for primitive words."""


class PreconditionError(WordforgeError):
    """A structural precondition on the input word does not hold."""


class NotGaloisError(PreconditionError):
    """An operand required to be a Galois word is not one."""


class NonPrimitiveConcatError(PreconditionError):
    """The concatenation of the operands is a repetition."""


class SentinelError(WordforgeError):
    """Sentinel misuse: missing, duplicated, or present in a plain body."""


class FamilyError(WordforgeError):
    """A factor family does not satisfy what the operation requires."""


class NotFFError(FamilyError):
    """The family does not contain every alphabet letter."""


class NotUMFFError(FamilyError):
    """The family fails the xyz closure, so maximal factorization is not unique."""

    def __init__(self, message, witnesses=()):
        super().__init__(message)
        self.witnesses = tuple(witnesses)


class BuildError(WordforgeError):
    """The circ-UMFF builder could not extend the input family."""


class CapExceededError(WordforgeError):
    """A requested exhaustive sweep exceeds the configured size cap."""
