class WeylGapBaseError(Exception):
    """The base exception for weylgap."""

class InvalidParameterError(WeylGapBaseError, ValueError):
    """Exception raised when a type, rank, dimension, weight or family parameter is out of range."""

class DimensionMismatchError(WeylGapBaseError, ValueError):
    """Exception raised when operands have incompatible sizes or metric forms."""

class NotSymmetricError(WeylGapBaseError):
    """Exception raised when a signature is requested for a non-symmetric matrix."""

class NotInvariantError(WeylGapBaseError):
    """Exception raised when a subspace or subalgebra is not preserved where it must be."""

class ClosureError(WeylGapBaseError):
    """Exception raised when a basis is dependent, not closed under the bracket 
    or does not preserve its bilinear form."""

class NotWeylError(WeylGapBaseError):
    """Exception raised when a stabilizer is requested for a zero or non-Weyl tensor."""

class CommutationError(WeylGapBaseError):
    """Exception raised when an involution fails A^2 = +/-1 or does not commute 
    with the compact anti-involution."""

class TensorFormatError(WeylGapBaseError):
    """Exception raised when a tensor text file cannot be parsed."""

__all__ = [
    "WeylGapBaseError",
    "InvalidParameterError",
    "DimensionMismatchError",
    "NotSymmetricError",
    "NotInvariantError",
    "ClosureError",
    "NotWeylError",
    "CommutationError",
    "TensorFormatError"
]
