"""Exception hierarchy. Every error carries a stable ``code`` string."""


class GrilError(Exception):
    code = "GRIL_ERROR"


class MixedRingsError(GrilError):
    code = "MIXED_RINGS"


class SizeExceededError(GrilError):
    code = "SIZE_EXCEEDED"


class NonHomogeneousGeneratorError(GrilError):
    code = "NON_HOMOGENEOUS_GENERATOR"


class ImproperIdealError(GrilError):
    code = "IMPROPER_IDEAL"


class BadMultiplicativeSetError(GrilError):
    code = "BAD_MULTIPLICATIVE_SET"


class GroupMismatchError(GrilError):
    code = "GROUP_MISMATCH"


class AmbientMismatchError(GrilError):
    code = "AMBIENT_MISMATCH"


class PredicateNotSatisfiedError(GrilError):
    code = "PREDICATE_NOT_SATISFIED"


class NotVnrError(GrilError):
    code = "NOT_VNR"


class UnknownCheckError(GrilError):
    code = "UNKNOWN_CHECK"


class SpecParseError(GrilError):
    code = "PARSE_ERROR"

    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column


class SpecValidationError(GrilError):
    code = "VALIDATION_ERROR"

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
