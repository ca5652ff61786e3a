"""
Exception hierarchy for the weighted oriented edge ideal toolkit.

Every error carries the exit status the CLI answers with: 2 for bad input or
exceeded resource caps, 1 when a computed verdict fails a correctness gate.
"""
from typing import Dict


class WoIdealsError(Exception):
    """Base class for all domain errors."""

    exit_code: int = 2

    def to_dict(self) -> Dict:
        """
        Convert the error to a dictionary.

        Returns:
            Dict: The error message and its type name.
        """
        return {
            'error': str(self),
            'type': type(self).__name__
        }


class UniverseMismatchError(WoIdealsError):
    """Operands belong to different variable universes."""


class ExponentOverflowError(WoIdealsError):
    """An exponent exceeded the documented maximum."""


class ParseError(WoIdealsError):
    """Malformed monomial, ideal or graph input."""


class GraphError(WoIdealsError):
    """Invalid graph structure or inconsistent family parameters."""


class PowerError(WoIdealsError):
    """A power outside the supported range was requested."""


class CapExceededError(WoIdealsError):
    """A resource cap (cover enumeration or generator ceiling) was exceeded."""


class FamilyPreconditionError(WoIdealsError):
    """A graph does not satisfy the structural clause of a theorem predicate."""


class OracleDisagreementError(WoIdealsError):
    """Two independent computations of the same ideal disagree."""

    exit_code = 1
