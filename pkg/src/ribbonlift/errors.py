"""Exception hierarchy.

Every error carries a stable ``code`` string; the command line tool prints it
in its machine-readable error report and maps it to an exit status.
"""


class RibbonLiftError(Exception):
    code = "Error"


# ribbon graphs

class NotPermutation(RibbonLiftError):
    code = "NotPermutation"


class NotInvolution(RibbonLiftError):
    code = "NotInvolution"


class LowValence(RibbonLiftError):
    code = "LowValence"


class EmptyGraph(RibbonLiftError):
    code = "EmptyGraph"


class Disconnected(RibbonLiftError):
    code = "Disconnected"


class InvalidGenus(RibbonLiftError):
    code = "InvalidGenus"


class DartNotInVertex(RibbonLiftError):
    code = "DartNotInVertex"


class UnknownVertex(RibbonLiftError):
    code = "UnknownVertex"


class MissingColour(RibbonLiftError):
    code = "MissingColour"


class NotPlanar(RibbonLiftError):
    code = "NotPlanar"

    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class BudgetExceeded(RibbonLiftError):
    """Raised by exhaustive searches; ``partial`` holds the best value found."""

    code = "BudgetExceeded"

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


# diagrams

class NotGenusZero(RibbonLiftError):
    code = "NotGenusZero"


class CrossingValence(RibbonLiftError):
    code = "CrossingValence"


class ClosedStrand(RibbonLiftError):
    code = "ClosedStrand"


class BadTrueVertex(RibbonLiftError):
    code = "BadTrueVertex"


class NotFourValent(RibbonLiftError):
    code = "NotFourValent"


# words, coverings, bounds, defect

class NotDoubleOccurrence(RibbonLiftError):
    code = "NotDoubleOccurrence"


class NegativeRamification(RibbonLiftError):
    code = "NegativeRamification"


class UnknownGraph(RibbonLiftError):
    code = "UnknownGraph"


class DartSetMismatch(RibbonLiftError):
    code = "DartSetMismatch"


class AlphaMismatch(RibbonLiftError):
    code = "AlphaMismatch"


# files and command line

class ParseError(RibbonLiftError):
    """Malformed input text; reported under the code ``SyntaxError``."""

    code = "SyntaxError"

    def __init__(self, message, line=None):
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)
        self.line = line


class UnknownCommand(RibbonLiftError):
    code = "UnknownCommand"


class ReductionWarning(UserWarning):
    """Emitted when an input is silently simplified (loops stripped, etc.)."""
