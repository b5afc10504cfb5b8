"""Exception hierarchy shared by every framekit module."""


class FramekitError(Exception):
    """Base class for all framekit errors."""


class DimensionMismatch(FramekitError):
    """Operand shapes are incompatible."""


class NonFiniteInput(FramekitError):
    """An input contains NaN or Inf entries."""


class SingularMatrix(FramekitError):
    """A pivot fell below the relative cutoff during elimination."""


class NotHermitian(FramekitError):
    """A matrix required to be Hermitian is not, beyond tolerance."""


class NotPositiveDefinite(FramekitError):
    """An eigenvalue fell below the positivity floor."""


class BadIndexSet(FramekitError):
    """An index set is empty, duplicated, unsorted or out of range."""


class NotAFrame(FramekitError):
    """The vectors do not span the ambient space."""


class NotADual(FramekitError):
    """The reconstruction identity fails for the claimed dual."""


class MrcViolated(FramekitError):
    """The surviving vectors cannot compensate for the erased positions.

    Carries the name of the criterion that failed and the smallest
    singular value observed, for diagnosability.
    """

    def __init__(self, criterion: str, smallest: float):
        self.criterion = criterion
        self.smallest = smallest
        super().__init__(
            f"minimal redundancy violated ({criterion} criterion, "
            f"smallest singular value {smallest:.3e})"
        )


class NotInvertible(FramekitError):
    """The operator has no numeric inverse."""


class PrefixNotInvertible(NotInvertible):
    """A prefix of the rank-one chain is singular; carries its 1-based index."""

    def __init__(self, prefix: int):
        self.prefix = prefix
        super().__init__(f"chain prefix {prefix} is not invertible")


class TooManySubsets(FramekitError):
    """Subset enumeration would exceed the hard cap."""


class NotFullSpark(FramekitError):
    """Some selection of dim-many vectors is linearly dependent."""


class NotCanonicalOrder(FramekitError):
    """The leading dim-many vectors do not form a basis."""


class GeneratorNotTotallyNonsingular(FramekitError):
    """A square submatrix of the generator is singular; carries (rows, cols)."""

    def __init__(self, rows, cols):
        self.rows = tuple(rows)
        self.cols = tuple(cols)
        super().__init__(
            f"singular square submatrix at rows {self.rows}, cols {self.cols}"
        )


class BadSeeds(FramekitError):
    """Seed sequences violate positivity, b1 = a2, or the unit-determinant rule."""


class IntegralityBroken(FramekitError):
    """An entry that must be a uniquely determined integer is not (internal bug)."""


class IntegerOverflow(FramekitError):
    """An exact integer entry left the double-representable range."""


class NotParseval(FramekitError):
    """The frame operator differs from the identity beyond tolerance."""


class NoPartner(FramekitError):
    """Every other vector has unit norm; no rotation partner exists."""


class IsOrthonormalBasis(FramekitError):
    """The frame is an orthonormal basis and admits no erasure at all."""


class FirstBlockNotOrthonormal(FramekitError):
    """The leading dim-many vectors are not an orthonormal basis."""
