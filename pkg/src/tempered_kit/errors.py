"""Exception hierarchy shared by all modules."""


class TemperedKitError(Exception):
    """Base class for domain errors (CLI exit code 1)."""


class ParseError(TemperedKitError, ValueError):
    """Malformed input text (CLI exit code 2)."""


class CycleError(TemperedKitError):
    """A relation whose closure is not antisymmetric."""


class DisconnectedError(TemperedKitError):
    """An operation that needs a connected space got a disconnected one."""


class NonIntegralError(TemperedKitError, ArithmeticError):
    """Inverse Euler transform of an inconsistent sequence."""


class NonCommutingError(TemperedKitError):
    """A square of integer matrices fails to commute."""


class NotExactError(TemperedKitError):
    """A sequence of free modules is not short exact."""


class ConditionKError(TemperedKitError):
    """The graph violates Condition (K).

    ``witness`` is a 1-based vertex that is the base point of exactly one
    simple cycle.
    """

    def __init__(self, witness: int):
        super().__init__(f"Condition (K) fails: vertex {witness} is the base of exactly one simple cycle")
        self.witness = witness


class NotLocallyClosedError(TemperedKitError):
    """A vertex set that is not a difference of nested hereditary saturated sets."""


class NotNestedError(TemperedKitError):
    """Lattice elements passed to a six-term computation are not nested."""


class ShapeMismatchError(TemperedKitError):
    """Two filtered K-theory objects live over non-homeomorphic spaces."""


class UnknownSignatureError(TemperedKitError, KeyError):
    """Signature absent from the classification table."""

    def __str__(self):
        return Exception.__str__(self)
