from enum import Enum
from typing import Any, Dict, List, Optional


class MonoqueueError(Exception):
    """Base exception for monoqueue errors."""

    def __init__(self, message: str, error_data: Optional[Dict[str, Any]] = None):
        self.message = message
        self.error_data = error_data or {}
        if self.error_data:
            details = ", ".join(f"{k}={v}" for k, v in self.error_data.items())
            super().__init__(f"{message} ({details})")
        else:
            super().__init__(message)


class QueueErrorKind(str, Enum):
    MONOTONICITY_VIOLATION = "MonotonicityViolation"
    DUPLICATE_ID = "DuplicateId"
    UNKNOWN_ID = "UnknownId"
    NOT_A_DECREASE = "NotADecrease"
    KEY_OUT_OF_RANGE = "KeyOutOfRange"
    WINDOW_VIOLATION = "WindowViolation"


class QueueError(MonoqueueError):
    """A queue operation broke the monotone queue contract."""

    kind: QueueErrorKind

    def __init__(
        self,
        message: str,
        item_id: Optional[int] = None,
        key: Optional[int] = None,
        **context: Any,
    ):
        self.item_id = item_id
        self.key = key
        super().__init__(message, {"id": item_id, "key": key, **context})


class MonotonicityViolation(QueueError):
    kind = QueueErrorKind.MONOTONICITY_VIOLATION


class DuplicateId(QueueError):
    kind = QueueErrorKind.DUPLICATE_ID


class UnknownId(QueueError):
    kind = QueueErrorKind.UNKNOWN_ID


class NotADecrease(QueueError):
    kind = QueueErrorKind.NOT_A_DECREASE


class KeyOutOfRange(QueueError):
    kind = QueueErrorKind.KEY_OUT_OF_RANGE


class WindowViolation(QueueError):
    kind = QueueErrorKind.WINDOW_VIOLATION


class ValidationError(MonoqueueError):
    """Raised when validation fails."""

    pass


class ConfigurationError(MonoqueueError):
    """Exception for configuration issues."""

    pass


class ParseError(MonoqueueError):
    """Malformed input text, reported with its 1-based line number."""

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        super().__init__(message, {"line": line_number} if line_number else None)


class VerificationError(MonoqueueError):
    """Results failed verification or cross-checking."""

    def __init__(self, message: str, violations: Optional[List[Any]] = None):
        self.violations = list(violations or [])
        super().__init__(message, {"violations": len(self.violations)})
