# src/errors.py

"""
Exception hierarchy for the q-GT toolkit.

Every error carries an exit code used by main.py: 2 for malformed or
out-of-domain input, 1 for failures discovered while computing.
"""

from typing import Any, Dict


class QGTError(Exception):
    """Base class for all toolkit errors."""

    exit_code = 1

    def __init__(self, message: str, **context: Any):
        super().__init__(message)
        self.message = message
        self.context = context

    def to_dict(self) -> Dict[str, Any]:
        return {
            "error": type(self).__name__,
            "message": self.message,
            "context": {k: str(v) for k, v in self.context.items()},
        }


class InputError(QGTError):
    """Malformed or out-of-domain input."""

    exit_code = 2


class ParseError(InputError):
    pass


class InvalidQ(InputError):
    pass


class InvalidSignature(InputError):
    pass


class InvalidMeasure(InputError):
    pass


class LevelMismatch(InputError):
    pass


class LevelOutOfRange(InputError):
    pass


class IndexOutOfRange(InputError):
    pass


class EntryOutOfRange(InputError):
    pass


class NegativeCoordinate(InputError):
    pass


class NegativeNu(InputError):
    pass


class RepeatedPoint(InputError):
    pass


class ZeroPoint(InputError):
    pass


class MissingGridValue(InputError):
    pass


class DegenerateEnclosure(QGTError):
    pass


class Explosion(QGTError):
    pass


class CapTooSmall(QGTError):
    pass


class NegativeMass(QGTError):
    """A computed extreme mass came out negative."""


class SupportViolation(QGTError):
    """A nonzero mass landed outside the proven support."""


class TailHit(QGTError):
    """A uniform draw fell into the unassigned tail of a truncated measure."""
