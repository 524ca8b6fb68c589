"""Exception hierarchy shared by every module of the package."""


class WeightedTorsionError(Exception):
    """Base class for all errors raised by this package.

    ``line`` and ``column`` locate the error in an input document when known.
    """

    def __init__(self, message="", line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class InputError(WeightedTorsionError):
    """Malformed input: bad vertex names, bad documents, bad arguments."""


class UnknownVertex(InputError):
    pass


class DuplicateVertex(InputError):
    pass


class IndexOutOfRange(InputError):
    pass


class UnsupportedVersion(InputError):
    pass


class WscSyntaxError(InputError):
    """A parse failure at a known position of a ``.wsc`` document."""


class VanishingScale(InputError):
    """A rescaling weight vanishes on some vertex."""


class ZeroScalar(InputError):
    pass


class HypothesisViolated(InputError):
    """A weight pair fails the support condition ``g(v) != 0 => f(v) != 0``."""


class NumericalError(WeightedTorsionError):
    pass


class EigenFailure(NumericalError):
    pass


class NotPSD(NumericalError):
    pass


class NotSubspace(NumericalError):
    pass


class NotEquivariant(NumericalError):
    pass


class SingularGram(NumericalError):
    pass


class LiftFailure(NumericalError):
    pass


class DegenerateBasis(NumericalError):
    pass
