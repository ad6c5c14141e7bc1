from typing import Any, Dict, Optional

EXIT_CHECK_FAILED = 1
EXIT_CONFIG_ERROR = 2
EXIT_NUMERICAL_FAILURE = 3


class HoairyException(Exception):
    exit_code = EXIT_NUMERICAL_FAILURE

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def as_dict(self) -> Dict[str, Any]:
        return {
            "error": self.__class__.__name__,
            "message": self.message,
            "details": self.details,
        }


class ConfigError(HoairyException):
    exit_code = EXIT_CONFIG_ERROR


class CheckFailed(HoairyException):
    exit_code = EXIT_CHECK_FAILED


class NumericalFailure(HoairyException):
    exit_code = EXIT_NUMERICAL_FAILURE


class NotExact(NumericalFailure):
    pass


class NotMonic(NumericalFailure):
    pass


class IdentityViolation(CheckFailed):
    pass


class SectorViolation(ConfigError):
    pass


class WeightCollision(ConfigError):
    pass


class NonConvergence(NumericalFailure):
    pass


class NumericalBreakdown(NumericalFailure):
    pass


class StencilFailure(NumericalFailure):
    pass


class SeedTooLarge(NumericalFailure):
    pass


class StepFailure(NumericalFailure):
    pass


class TrustWindowEmpty(NumericalFailure):
    pass


class TailTooLarge(NumericalFailure):
    pass
