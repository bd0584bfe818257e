"""Exception types shared across the package."""


class MubError(ValueError):
    """Base class for all errors raised by primemub."""


class ModulusMismatchError(MubError):
    """Two residues (or derived objects) with different moduli were combined."""


class NotInvertibleError(MubError, ArithmeticError):
    """A residue has no multiplicative inverse modulo N."""


class NotPrimeError(MubError):
    """An operation defined only for prime dimension received a composite one."""


class NotMonomialError(MubError):
    """A matrix is not of the form mu * Q^a P^b within tolerance."""


class NotUnitaryError(MubError):
    """A matrix fails the unitarity tolerance."""


class DimensionMismatchError(MubError):
    """Objects of different dimension were combined."""


class CollectionFullError(MubError):
    """An attempt was made to hold more than N+1 bases in dimension N."""
