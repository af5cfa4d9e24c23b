"""
Error types for OneCenter.
Core code raises these; the CLI maps `exit_code` to the process status.
"""


class OneCenterError(Exception):
    """Base class for all structured errors."""
    code = "error"
    exit_code = 2

    def __init__(self, message: str, **details):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_dict(self) -> dict:
        return {"error": self.code, "message": self.message, "details": self.details}


class DimensionMismatchError(OneCenterError):
    code = "dimension_mismatch"


class InvalidMetricError(OneCenterError):
    code = "invalid_metric"


class SymbolSetMismatchError(OneCenterError):
    """Two sequences are not permutations of the same symbol set."""
    code = "symbol_set_mismatch"


class WeightMismatchError(OneCenterError):
    code = "weight_mismatch"


class ScriptMismatchError(OneCenterError):
    """An edit script does not describe the string it is paired with."""
    code = "script_mismatch"


class EmptyInputError(OneCenterError):
    code = "empty_input"


class DimensionCapError(OneCenterError):
    code = "dimension_cap"


class OverflowRiskError(OneCenterError):
    code = "overflow_risk"


class InvalidParameterError(OneCenterError):
    code = "invalid_parameter"


class CodecSeparationError(OneCenterError):
    code = "codec_separation"


class IncompatibleAlgorithmError(OneCenterError):
    code = "incompatible_algorithm"


class InstanceParseError(OneCenterError):
    code = "parse_error"
    exit_code = 3
