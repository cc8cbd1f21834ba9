"""
Fullab Errors
Typed failures raised by the library; the CLI maps each family to an exit code
"""

from typing import Optional


class FullabError(Exception):
    """Base class for every error the library raises on purpose"""

    exit_code = 1

    def __init__(self, message: str = "", **details):
        super().__init__(message or self.__class__.__name__)
        self.details = details


# Validation family (exit code 2)
class ValidationError(FullabError):
    exit_code = 2


class NotSymmetric(ValidationError):
    """Rotation lists are not symmetric, or contain loops/multi-edges"""


class NotSphere(ValidationError):
    """Embedding violates V - E + F = 2 or is disconnected"""


class NonTriangleFace(ValidationError):
    """A face of the embedding is not a triangle"""


class BadDegreeProfile(ValidationError):
    """Degrees are not {5 x 12, 6 x rest}"""


class N22Forbidden(ValidationError):
    """No fullerene with 22 vertices exists"""


class InfeasibleN(ValidationError):
    """n is not an even integer >= 20 different from 22"""


class GluingFailed(ValidationError):
    """The gSW-free family could not be glued under the chosen convention"""


class PatchAmbiguous(ValidationError):
    """The C_36,1 growth patch could not be located or validated"""


class SpiralStuck(ValidationError):
    """Unwinding got stuck before visiting every vertex"""


class WindupFailed(ValidationError):
    """A pentagon vector does not close into a sphere triangulation"""


class DegreeOverflow(WindupFailed):
    """During windup a vertex would exceed its prescribed degree"""


class NoSpiralExists(ValidationError):
    """No unwinding of the graph succeeds"""


class MultiEdge(ValidationError):
    """An edge flip would create a multi-edge"""


class DegreeUnderflow(ValidationError):
    """An edge flip would drop a degree below three"""


class InvalidPath(ValidationError):
    """The vertex sequence is not a gSW path of the graph"""


class NoValidPath(ValidationError):
    """No qualifying degree-5 pair path exists for a phase-2 cut"""


class OutOfRange(ValidationError):
    """A character lies outside the normalization interval"""


class EmptyInput(ValidationError):
    """An operation that needs data received none"""


class SymmetryError(ValidationError):
    """A matrix handed to the eigensolver is not symmetric"""


class NotFound(ValidationError):
    """A pentagon vector or graph is absent from the isomer database"""


class ValidationFailed(ValidationError):
    """A planar_code record failed build validation"""

    def __init__(self, record_index: int, cause: Optional[Exception] = None):
        super().__init__(f"record {record_index} failed validation: {cause}",
                         record_index=record_index)
        self.record_index = record_index
        self.cause = cause


# Budget family (exit code 3)
class BudgetExceeded(FullabError):
    exit_code = 3


# Format / I/O family (exit code 4)
class FormatError(FullabError):
    exit_code = 4


class BadHeader(FormatError):
    """planar_code header missing or misspelled"""


class TruncatedRecord(FormatError):
    """planar_code file ended inside a record"""
