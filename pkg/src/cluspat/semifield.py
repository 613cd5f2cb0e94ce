"""Tropical-semifield arithmetic on monomial exponent vectors.

A coefficient monomial over m generators is a length-m tuple of integers
(the exponents); the group operation adds exponent vectors and the
auxiliary addition takes componentwise minima.  m = 0 gives the trivial
semifield: every monomial is the empty tuple.

All functions are pure and the values are plain tuples, so they are safe
to share freely.
"""

from .errors import DimensionError

TropMonomial = tuple


def trop_identity(m: int) -> TropMonomial:
    """The neutral monomial (all exponents zero)."""
    return (0,) * m


def _check_lengths(a, b):
    if len(a) != len(b):
        raise DimensionError(
            f"tropical monomials of lengths {len(a)} and {len(b)}")


def trop_add(a: TropMonomial, b: TropMonomial) -> TropMonomial:
    """Auxiliary addition: componentwise minimum of exponents."""
    _check_lengths(a, b)
    return tuple(x if x < y else y for x, y in zip(a, b))


def trop_mul_pow(a: TropMonomial, b: TropMonomial, k: int = 1) -> TropMonomial:
    """Group operation a * b**k; k = -1 multiplies by the inverse."""
    _check_lengths(a, b)
    if k == 0:
        return tuple(a)
    return tuple(x + k * y for x, y in zip(a, b))


def trop_one_plus(y: TropMonomial) -> TropMonomial:
    """1 (+) y: componentwise minimum with the zero vector.

    Equals the identity exactly when every exponent of y is nonnegative.
    """
    return tuple(e if e < 0 else 0 for e in y)
