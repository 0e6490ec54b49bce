"""Exception hierarchy shared by every module.

Each exception carries a stable ``code`` string so the command line can
emit machine-readable error objects.
"""

from __future__ import annotations


class SingerLdpcError(Exception):
    code = "Error"

    def to_json(self) -> dict:
        return {"error": self.code, "message": str(self)}


# galois
class NonPrimeCharacteristic(SingerLdpcError):
    """Characteristic is not a prime."""

    code = "NonPrimeCharacteristic"


class NonPrimitiveModulus(SingerLdpcError):
    """Supplied modulus is not a primitive polynomial."""

    code = "NonPrimitiveModulus"


class FieldMismatch(SingerLdpcError):
    """Operands belong to different fields."""

    code = "FieldMismatch"


class ZeroInverse(SingerLdpcError):
    """Zero has no multiplicative inverse."""

    code = "ZeroInverse"


class LogOfZero(SingerLdpcError):
    """Zero has no discrete logarithm."""

    code = "LogOfZero"


class SizeGuardExceeded(SingerLdpcError):
    """Requested structure exceeds the size guard."""

    code = "SizeGuardExceeded"


# projgeom
class ZeroVector(SingerLdpcError):
    """The zero vector does not define a point."""

    code = "ZeroVector"


class EqualPoints(SingerLdpcError):
    """Two distinct points are required."""

    code = "EqualPoints"


# orbits / spreads
class NonDivisorRank(SingerLdpcError):
    """Spread rank must be a proper divisor of n."""

    code = "NonDivisorRank"


class NotDisjoint(SingerLdpcError):
    """Subspaces are not pairwise disjoint."""

    code = "NotDisjoint"


class UnsupportedOrder(SingerLdpcError):
    """Operation is not defined for this field order."""

    code = "UnsupportedOrder"


class RankMismatch(SingerLdpcError):
    """Spread parameters do not satisfy the rank requirement."""

    code = "RankMismatch"


# quadrics
class ReducibleForm(SingerLdpcError):
    """The quadratic xi^2 + b xi + c is reducible."""

    code = "ReducibleForm"


class NotAnOvoid(SingerLdpcError):
    """Constructed point set fails the elliptic-quadric checks."""

    code = "NotAnOvoid"


class SpreadLine(SingerLdpcError):
    """Line belongs to the spread."""

    code = "SpreadLine"


class PointNotOnQuadric(SingerLdpcError):
    """Point does not lie on the quadric."""

    code = "PointNotOnQuadric"


# pcm / codec / cli
class OrbitMismatch(SingerLdpcError):
    """Starter set and orbit decomposition disagree."""

    code = "OrbitMismatch"


class NotASpread(SingerLdpcError):
    """Family of subspaces does not partition the points."""

    code = "NotASpread"


class MalformedAlist(SingerLdpcError):
    """Input is not a well-formed alist file."""

    code = "MalformedAlist"


class ZeroMatrix(SingerLdpcError):
    """Parity-check matrix has no nonzero entry."""

    code = "ZeroMatrix"


class LengthMismatch(SingerLdpcError):
    """Vector length does not match the code."""

    code = "LengthMismatch"


class InvalidConfig(SingerLdpcError):
    """Command-line configuration is inconsistent."""

    code = "InvalidConfig"
