"""Shared enums and error types."""
from __future__ import annotations

from enum import Enum


class EntropyClass(Enum):
    NULL = "null"
    POSITIVE = "positive"


class InputError(ValueError):
    """Malformed or inadmissible input data."""


class TranslationUnsupported(ValueError):
    """Fixed-point counting is undefined for maps with a translation part."""


class SearchFailed(RuntimeError):
    """A witness search came up empty; this is *not* a proof of nonexistence."""


class HypothesisViolated(RuntimeError):
    """The quasi-amplified descent hypothesis fails on the given data."""


class NotContractible(RuntimeError):
    """Quotient by the chosen ray does not yield a salient cone."""


class NotInvariant(RuntimeError):
    """The map does not preserve the required ray or cone."""


class NoConvergence(RuntimeError):
    """Power iteration failed to settle within the iteration budget."""


class NoneInPositiveCone(RuntimeError):
    """The fixed sublattice meets only the negative locus of the form."""


class FieldTooLarge(RuntimeError):
    """Number-field computation refused: minimal polynomial degree over bound."""


class NotIsometry(ValueError):
    """Matrix does not preserve the given bilinear form."""


class BadSignature(ValueError):
    """Gram matrix does not have signature (1, rank-1)."""
